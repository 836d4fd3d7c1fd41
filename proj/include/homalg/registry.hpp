#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/structure_io.hpp"

namespace homalg {

// Bad command line or missing registry binding.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Bindings = std::map<std::string, Scalar>;

// Parses "name=p/q".
std::pair<std::string, Scalar> parse_binding(const std::string& text);

struct Parameter {
  std::string name;
  std::optional<Scalar> default_value;
};

struct RegistryEntry {
  std::string name;
  StructureKind kind;
  std::string summary;
  std::vector<Parameter> parameters;
  std::function<StructureFile(const Bindings&)> make;

  // Resolves defaults, then builds. Throws UsageError on a missing or unknown binding.
  StructureFile build(const Bindings& bindings = {}) const;
};

// algebra-mu1, algebra-mu2, bialgebra-1..3, hopf-2; all on the basis e1, e2 with unit e1.
const std::vector<RegistryEntry>& registry();
// Throws UsageError for unknown names.
const RegistryEntry& registry_entry(const std::string& name);

// The unital algebras mu1 / mu2 with twists [[a1, 0], [a2 - a1, a2]] / [[a1, 0], [a2, a1]].
HomAlgebra algebra_mu1(const Scalar& a1, const Scalar& a2);
HomAlgebra algebra_mu2(const Scalar& a1, const Scalar& a2);
// Row 1, 2 or 3 of the bialgebra table on mu1.
HomBialgebra table_bialgebra(int row, const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2,
                             const Scalar& b3);
// The beta listed for a table row.
LinearMap table_beta(int row, const Scalar& b1, const Scalar& b2, const Scalar& b3);

}  // namespace homalg
