#pragma once

#include <optional>

#include "homalg/defect.hpp"
#include "homalg/perm3.hpp"
#include "homalg/tensor.hpp"

namespace homalg {

// Finite-dimensional Hom-algebra (V, mu, alpha, eta) given by structure
// constants. alpha is an arbitrary linear map; it is not required to be
// multiplicative (see check_twist_multiplicative).
class HomAlgebra {
 public:
  HomAlgebra(MulTensor mul, LinearMap alpha, std::optional<Vector> unit = std::nullopt);

  std::size_t dim() const { return alpha_.dim(); }
  const MulTensor& mul() const { return mul_; }
  const LinearMap& alpha() const { return alpha_; }
  const std::optional<Vector>& unit() const { return unit_; }

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;

 private:
  MulTensor mul_;
  LinearMap alpha_;
  std::optional<Vector> unit_;
};

// (V, [.,.], alpha). Skew-symmetry is checked, not enforced.
class HomBracket {
 public:
  HomBracket(MulTensor bracket, LinearMap alpha);

  std::size_t dim() const { return alpha_.dim(); }
  const MulTensor& bracket() const { return bracket_; }
  const LinearMap& alpha() const { return alpha_; }

 private:
  MulTensor bracket_;
  LinearMap alpha_;
};

// Bilinear extension of structure constants.
Vector bilinear(const MulTensor& c, const Vector& x, const Vector& y);
Vector multiply(const HomAlgebra& a, const Vector& x, const Vector& y);
Vector bracket(const HomBracket& l, const Vector& x, const Vector& y);

// mu(mu(x (x) y) (x) alpha(z)) - mu(alpha(x) (x) mu(y (x) z))
Vector alpha_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

// Basis triples (i, j, k) with nonzero alpha-associator.
DefectReport check_hom_associative(const HomAlgebra& a);

enum class UnitCheck { unital, not_unital, no_unit_declared };
UnitCheck check_unital(const HomAlgebra& a);

// sum_{sigma in G} sign(sigma) a_{alpha,mu} o Phi_sigma = 0 on every basis triple.
DefectReport check_G_hom_associative(const HomAlgebra& a, Subgroup g);

// Whether alpha(mu(x (x) y)) = mu(alpha(x) (x) alpha(y)); not part of the axioms.
DefectReport check_twist_multiplicative(const HomAlgebra& a);

// [x, y] = mu(x (x) y) - mu(y (x) x), same alpha.
HomBracket commutator_bracket(const HomAlgebra& a);

DefectReport check_skew(const HomBracket& l);
// cyclic sum of [alpha(x), [y, z]]
DefectReport check_hom_jacobi(const HomBracket& l);
// [[x,y],alpha(z)] = [[x,z],alpha(y)] + [alpha(x),[y,z]]
DefectReport check_hom_leibniz(const HomBracket& l);

// (V1 (x) V2, mu1 (x) mu2, alpha1 (x) alpha2, eta1 (x) eta2); basis e_i (x) f_j
// is index i * dim2 + j. Throws std::invalid_argument if exactly one factor is unital.
HomAlgebra tensor_product(const HomAlgebra& a1, const HomAlgebra& a2);
LinearMap kronecker(const LinearMap& f, const LinearMap& g);

// mu' o (f (x) f) = f o mu, f(eta) = eta', f o alpha = alpha' o f.
DefectReport check_algebra_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& target);

// Left module (M, twist, action): action o (mu (x) twist) = action o (alpha (x) action),
// checked on basis triples (v_i, v_j, m_a). M has dimension twist.dim().
DefectReport check_module(const HomAlgebra& a, const LinearMap& twist, const ActionTensor& action);

// The algebra acting on itself: M = V, twist = alpha, action = mu.
ActionTensor self_action(const HomAlgebra& a);

}  // namespace homalg
