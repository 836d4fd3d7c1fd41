#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/coalgebra.hpp"
#include "homalg/linear_solve.hpp"

namespace homalg {

// Algebra and coalgebra on the same space, both with (co)unit. Compatibility
// is checked by check_bialgebra_weak / check_bialgebra_strict.
class HomBialgebra {
 public:
  HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);

  std::size_t dim() const { return algebra_.dim(); }
  const HomAlgebra& algebra() const { return algebra_; }
  const HomCoalgebra& coalgebra() const { return coalgebra_; }
  const Vector& unit() const { return *algebra_.unit(); }
  const Covector& counit() const { return *coalgebra_.counit(); }

  friend bool operator==(const HomBialgebra&, const HomBialgebra&) = default;

 private:
  HomAlgebra algebra_;
  HomCoalgebra coalgebra_;
};

// (a (x) b) . (c (x) d) = mu(a (x) c) (x) mu(b (x) d)
Tensor2 bullet(const HomAlgebra& a, const Tensor2& s, const Tensor2& t);

// Delta and eps are algebra morphisms: Delta(1) = 1 (x) 1,
// Delta(xy) = Delta(x) . Delta(y), eps(1) = 1, eps(xy) = eps(x) eps(y).
DefectReport check_bialgebra_weak(const HomBialgebra& b);
// Weak conditions plus Delta o alpha = (alpha (x) alpha) o Delta and eps o alpha = eps.
DefectReport check_bialgebra_strict(const HomBialgebra& b);

// f * g = mu o (f (x) g) o Delta
LinearMap convolution(const HomBialgebra& b, const LinearMap& f, const LinearMap& g);
// gamma(f) = alpha o f o beta
LinearMap convolution_twist(const HomBialgebra& b, const LinearMap& f);
// eta o eps, the convolution unit
LinearMap convolution_unit(const HomBialgebra& b);

enum class ConvolutionCheck { holds, fails, premises_not_met };

// gamma(f) * (g * h) = (f * g) * gamma(h) on every triple of matrix units
// (dim <= 3) and on `samples` seeded random triples. Requires the algebra to
// be Hom-associative and the coalgebra Hom-coassociative.
ConvolutionCheck check_convolution_hom_associative(const HomBialgebra& b, std::size_t samples, std::uint64_t seed);

// A Hom-bialgebra with a two-sided convolution inverse of the identity.
class HomHopf {
 public:
  // Throws std::invalid_argument unless S * id = id * S = eta o eps.
  HomHopf(HomBialgebra bialgebra, LinearMap antipode);

  const HomBialgebra& bialgebra() const { return bialgebra_; }
  const LinearMap& antipode() const { return antipode_; }

  friend bool operator==(const HomHopf&, const HomHopf&) = default;

 private:
  HomBialgebra bialgebra_;
  LinearMap antipode_;
};

bool is_antipode(const HomBialgebra& b, const LinearMap& s);

struct UniqueAntipode {
  HomHopf hopf;
  bool fixes_unit;        // S(eta(1)) = eta(1)
  bool preserves_counit;  // eps o S = eps
};
struct NoAntipode {};
// Solutions S = particular + span(kernel).
struct AntipodeFamily {
  LinearMap particular;
  std::vector<LinearMap> kernel;
};
using AntipodeResult = std::variant<UniqueAntipode, NoAntipode, AntipodeFamily>;

// The 2 n^2 linear equations S * id = eta o eps and id * S = eta o eps in
// the n^2 unknowns S(r, c), unknown index r * n + c.
LinearSystem antipode_system(const HomBialgebra& b);
LinearMap map_from_unknowns(const Vector& x, std::size_t dim);
AntipodeResult solve_antipode(const HomBialgebra& b);
AntipodeResult solve_antipode(const HomBialgebra& b, const LinearSystem& system);

HomBialgebra dual_bialgebra(const HomBialgebra& b);
// Dualizes both sides and transposes S. Throws std::logic_error if the
// transposed antipode fails on the dual.
HomHopf dual_hopf(const HomHopf& h);

bool is_primitive(const HomBialgebra& b, const Vector& x);
// (beta (x) Delta) Delta(x) = tau_13 (Delta (x) beta) Delta(x) and Delta^op(x) = Delta(x)
bool is_generalized_primitive(const HomBialgebra& b, const Vector& x);

struct PrimitiveSubspace {
  std::vector<Vector> basis;
  bool counit_vanishes = true;  // eps(x) = 0 on the basis
  bool bracket_closed = true;   // commutators of basis pairs are primitive again
};
PrimitiveSubspace primitive_subspace(const HomBialgebra& b);

struct GeneralizedPrimitiveSubspace {
  std::vector<Vector> basis;
  bool contains_primitives = true;  // Prim is a subspace of GPrim
  bool bracket_closed = true;
};
GeneralizedPrimitiveSubspace generalized_primitive_subspace(const HomBialgebra& b);

// Whether span(sub) is contained in span(super).
bool span_contains(const std::vector<Vector>& super, const std::vector<Vector>& sub, std::size_t dim);

// On every basis vector x: x = sum x1 eps(x2) = sum eps(x1) x2, and for each
// given f, f(x) = sum f(x1) eps(x2) = sum eps(x1) f(x2).
bool counit_expansion_check(const HomBialgebra& b, const std::vector<LinearMap>& maps = {});

}  // namespace homalg
