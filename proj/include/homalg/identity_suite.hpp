#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homalg/coalgebra.hpp"

namespace homalg {

struct IdentityTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct IdentitySuiteResult {
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityTally> tallies;
  std::size_t admissible_instances = 0;  // instances where both admissibility checkers say true

  bool all_hold() const;
};

// Random (Delta, beta) instance number i of a seeded suite; odd i are cocommutative.
HomCoalgebra identity_suite_instance(std::size_t dim, std::uint64_t seed, std::size_t i);

// The flip relations between Delta, Delta^op and Phi, both expansions of
// c_beta(Delta_L), cyclic sum = 2 * alternating sum, and agreement of the two
// admissibility checkers, on `samples` seeded instances.
IdentitySuiteResult run_identity_suite(std::size_t dim, std::size_t samples, std::uint64_t seed);

}  // namespace homalg
