#pragma once

#include <array>
#include <optional>
#include <vector>

#include "homalg/defect.hpp"
#include "homalg/perm3.hpp"
#include "homalg/tensor.hpp"

namespace homalg {

// Hom-coalgebra (V, Delta, beta) with an optional counit. Delta need not be
// coassociative in any sense. The Vinberg and preLie variants (G2, G3) are
// realized with Delta: V -> V (x) V; the published definitions write
// "mu: V -> V x V" there, which is read as a misprint for Delta.
class HomCoalgebra {
 public:
  HomCoalgebra(ComulTensor comul, LinearMap beta, std::optional<Covector> counit = std::nullopt);

  std::size_t dim() const { return beta_.dim(); }
  const ComulTensor& comul() const { return comul_; }
  const LinearMap& beta() const { return beta_; }
  const std::optional<Covector>& counit() const { return counit_; }

  friend bool operator==(const HomCoalgebra&, const HomCoalgebra&) = default;

 private:
  ComulTensor comul_;
  LinearMap beta_;
  std::optional<Covector> counit_;
};

// A linear map V -> V (x) V (x) V, stored as its value on each basis vector.
class TriMap {
 public:
  TriMap() = default;
  explicit TriMap(std::size_t dim) : values_(dim, Tensor3(dim)) {}
  explicit TriMap(std::vector<Tensor3> values) : values_(std::move(values)) {}

  std::size_t dim() const { return values_.size(); }
  const Tensor3& operator[](std::size_t k) const { return values_[k]; }
  Tensor3& operator[](std::size_t k) { return values_[k]; }
  bool is_zero() const;

  TriMap& operator+=(const TriMap& o);
  TriMap& operator-=(const TriMap& o);
  TriMap& operator*=(const Scalar& s);
  friend TriMap operator+(TriMap a, const TriMap& b) { return a += b; }
  friend TriMap operator-(TriMap a, const TriMap& b) { return a -= b; }
  friend TriMap operator-(TriMap a) { return a *= Scalar(-1); }
  friend TriMap operator*(const Scalar& s, TriMap a) { return a *= s; }
  friend bool operator==(const TriMap&, const TriMap&) = default;

 private:
  std::vector<Tensor3> values_;
};

// Phi_sigma o t
TriMap phi_apply(Perm3 sigma, const TriMap& t);
// sum over G of sign(sigma) Phi_sigma o t
TriMap signed_orbit_sum(Subgroup g, const TriMap& t);

Tensor2 comultiply(const HomCoalgebra& c, const Vector& x);
Tensor2 comultiply(const ComulTensor& d, const Vector& x);

// Delta^op = tau o Delta; keeps beta and counit.
HomCoalgebra delta_op(const HomCoalgebra& c);
// Delta_L = Delta - Delta^op; keeps beta, drops the counit.
HomCoalgebra delta_L(const HomCoalgebra& c);

// (second (x) beta) o first
TriMap expand_left(const ComulTensor& first, const ComulTensor& second, const LinearMap& beta);
// (beta (x) second) o first
TriMap expand_right(const ComulTensor& first, const ComulTensor& second, const LinearMap& beta);

// c_beta(Delta) = (Delta (x) beta) o Delta - (beta (x) Delta) o Delta
TriMap beta_coassociator(const HomCoalgebra& c);

DefectReport check_hom_coassociative(const HomCoalgebra& c);

enum class CounitCheck { counital, not_counital, no_counit_declared };
CounitCheck check_counital(const HomCoalgebra& c);

// sum_{sigma in G} sign(sigma) Phi_sigma o c_beta(Delta) = 0
DefectReport check_G_hom_coalgebra(const HomCoalgebra& c, Subgroup g);

// Hom-Lie admissibility computed two ways: the cyclic co-Jacobi sum of
// Delta_L, and the alternating S3 sum of c_beta(Delta). The first equals
// twice the second for every (Delta, beta).
struct AdmissibilityReport {
  TriMap cyclic_sum;       // c(D_L) + Phi_(213) c(D_L) + Phi_(231) c(D_L)
  TriMap alternating_sum;  // sum_{S3} sign Phi_sigma c(D)
  DefectReport cyclic;
  DefectReport alternating;

  bool admissible() const { return cyclic.holds(); }
  bool methods_agree() const { return cyclic.holds() == alternating.holds(); }
};
AdmissibilityReport check_hom_lie_admissible(const HomCoalgebra& c);

// The five universal relations between Delta, Delta^op, beta and Phi:
//   c(D^op) = -Phi_(13) c(D)
//   (beta (x) D^op) D = Phi_(13) (D (x) beta) D^op
//   (beta (x) D) D^op = Phi_(13) (D^op (x) beta) D
//   (D (x) beta) D^op = Phi_(213) (beta (x) D) D
//   (D^op (x) beta) D = Phi_(12) (D (x) beta) D
std::array<bool, 5> flip_identities_check(const HomCoalgebra& c);

// The two expansions of c_beta(Delta_L): through Delta and Delta^op, and
// through Delta alone.
TriMap coassociator_of_cocommutator_via_op(const HomCoalgebra& c);
TriMap coassociator_of_cocommutator_via_delta(const HomCoalgebra& c);
std::array<bool, 2> coassociator_expansion_check(const HomCoalgebra& c);

// Right comodule (M, twist, coaction): (coaction (x) beta) o coaction = (twist (x) Delta) o coaction.
DefectReport check_comodule(const HomCoalgebra& c, const LinearMap& twist, const CoactionTensor& coaction);
CoactionTensor self_coaction(const HomCoalgebra& c);

// (f (x) f) o Delta = Delta' o f, eps = eps' o f, f o beta = beta' o f.
DefectReport check_coalgebra_morphism(const LinearMap& f, const HomCoalgebra& c, const HomCoalgebra& target);

}  // namespace homalg
