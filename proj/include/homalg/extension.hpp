#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/coalgebra.hpp"
#include "homalg/groebner.hpp"

namespace homalg {

// Unknowns of a bialgebra structure on a 2-dimensional unital algebra with
// unit e1: Delta(e1) = e1 (x) e1 and eps(e1) = 1 are forced, leaving
// Delta(e2) = sum d_ij e_i (x) e_j and eps(e2).
inline const std::vector<std::string>& extension_variables() {
  static const std::vector<std::string> names{"d11", "d12", "d21", "d22", "eps2"};
  return names;
}
// The same plus beta(r, c) as b_rc, column convention.
inline const std::vector<std::string>& extension_variables_with_beta() {
  static const std::vector<std::string> names{"d11", "d12", "d21", "d22", "eps2", "b11", "b12", "b21", "b22"};
  return names;
}

enum class ExtensionReading {
  weak,       // B3 (Delta, eps algebra morphisms) and counit axiom
  strict,     // weak plus Delta o alpha = (alpha (x) alpha) o Delta and eps o alpha = eps
  with_beta,  // weak plus Hom-coassociativity with unknown beta
};

// Nonzero polynomial conditions, duplicates removed. Throws
// std::invalid_argument unless dim = 2 and the unit is e1.
std::vector<Poly> extension_system(const HomAlgebra& a, ExtensionReading reading);

struct ExtensionSearch {
  std::vector<Poly> weak_system;
  SystemVerdict weak;
  std::vector<Poly> strict_system;
  SystemVerdict strict;
  // Second pass with beta unknowns, run only when the weak system is consistent.
  std::optional<std::vector<Poly>> beta_system;
  std::optional<SystemVerdict> beta;
};

ExtensionSearch search_bialgebra_extension(const HomAlgebra& a, const GroebnerOptions& options = {});

// Coalgebra given by a point of the weak system (d11, d12, d21, d22, eps2).
HomCoalgebra extension_coalgebra(const std::vector<Scalar>& point, const LinearMap& beta);

bool is_consistent(const SystemVerdict& v);
bool is_definitive(const SystemVerdict& v);

}  // namespace homalg
