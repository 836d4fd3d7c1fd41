#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homalg/poly.hpp"

namespace homalg {

struct GroebnerOptions {
  unsigned degree_cap = 6;        // S-pairs whose lcm exceeds this degree are deferred
  std::size_t pair_cap = 10000;   // maximum number of S-pair reductions
  bool track_cofactors = true;
};

struct GroebnerResult {
  // Reduced, monic and sorted by leading monomial when complete. {1} for the unit ideal.
  std::vector<Poly> basis;
  // Set for the unit ideal when cofactors are tracked: 1 = sum cofactors[i] * generators[i].
  std::optional<std::vector<Poly>> certificate;
  bool capped = false;
  std::string cap_reason;
  std::size_t pairs_reduced = 0;

  bool unit_ideal() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

// Buchberger with the coprime and chain criteria. A certificate is only ever
// returned after it has been recombined and checked against the generators.
GroebnerResult buchberger(const std::vector<Poly>& generators, const GroebnerOptions& options = {});

// Full reduction of p by g (a Groebner basis for normal forms).
Poly normal_form(const Poly& p, const std::vector<Poly>& g);

// sum cofactors[i] * generators[i] == 1
bool certificate_recombines(const std::vector<Poly>& generators, const std::vector<Poly>& cofactors);

// Every variable has a pure power among the leading monomials of the basis.
bool zero_dimensional(const std::vector<Poly>& basis);

struct RationalSolutions {
  std::vector<std::vector<Scalar>> points;  // sorted, each satisfies every generator
  bool nonrational_omitted = false;        // some branch had roots outside Q
};
struct Inconsistent {
  std::vector<Poly> cofactors;  // sum cofactors[i] * generators[i] == 1
};
struct PositiveDimensional {
  std::vector<Poly> basis;
};
struct Inconclusive {
  std::string reason;
};
using SystemVerdict = std::variant<RationalSolutions, Inconsistent, PositiveDimensional, Inconclusive>;

// Decides consistency via a grevlex basis; for zero-dimensional ideals the
// rational points are enumerated by lex elimination and univariate rational
// root extraction, substituting one variable at a time.
SystemVerdict solve_system(const std::vector<Poly>& generators, const GroebnerOptions& options = {});

std::string describe(const SystemVerdict& v);

// Rational roots of a univariate polynomial in variable `var`, ascending.
// `rest_nonconstant` is set when a factor without rational roots remains.
std::vector<Scalar> rational_roots(const Poly& p, std::size_t var, bool* rest_nonconstant = nullptr);

}  // namespace homalg
