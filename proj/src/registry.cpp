#include "homalg/registry.hpp"

#include <set>

namespace homalg {

std::pair<std::string, Scalar> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("binding must look like name=value: " + text);
  try {
    return {text.substr(0, eq), Scalar::parse(text.substr(eq + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad rational in binding: " + text);
  }
}

StructureFile RegistryEntry::build(const Bindings& bindings) const {
  Bindings resolved;
  std::set<std::string> names;
  for (const auto& p : parameters) {
    names.insert(p.name);
    const auto it = bindings.find(p.name);
    if (it != bindings.end()) {
      resolved[p.name] = it->second;
    } else if (p.default_value) {
      resolved[p.name] = *p.default_value;
    } else {
      throw UsageError(name + ": missing binding for parameter " + p.name + " (use --param " + p.name + "=value)");
    }
  }
  for (const auto& [k, v] : bindings) {
    if (!names.count(k)) throw UsageError(name + ": unknown parameter " + k);
  }
  StructureFile f = make(resolved);
  f.name = name;
  f.parameters = resolved;
  return f;
}

namespace {

MulTensor unital_mul(const Scalar& e2e2) {
  MulTensor c(2);
  c(0, 0, 0) = 1;
  c(0, 1, 1) = 1;
  c(1, 0, 1) = 1;
  c(1, 1, 1) = e2e2;
  return c;
}

HomCoalgebra table_coalgebra(int row, const LinearMap& beta) {
  ComulTensor d(2);
  d(0, 0, 0) = 1;
  Covector eps{Scalar(1), Scalar(0)};
  switch (row) {
    case 1:
      d(1, 1, 1) = 1;
      eps[1] = 1;
      break;
    case 2:
      d(1, 0, 1) = 1;
      d(1, 1, 0) = 1;
      d(1, 1, 1) = -2;
      break;
    case 3:
      d(1, 0, 1) = 1;
      d(1, 1, 0) = 1;
      d(1, 1, 1) = -1;
      break;
    default:
      throw std::invalid_argument("table row must be 1, 2 or 3");
  }
  return HomCoalgebra(d, beta, eps);
}

std::vector<Parameter> a_required() { return {{"a1", std::nullopt}, {"a2", std::nullopt}}; }

std::vector<Parameter> table_parameters() {
  return {{"a1", Scalar(1)}, {"a2", Scalar(1)}, {"b1", std::nullopt}, {"b2", std::nullopt}, {"b3", std::nullopt}};
}

RegistryEntry bialgebra_entry(int row) {
  return {"bialgebra-" + std::to_string(row), StructureKind::bialgebra,
          "table row " + std::to_string(row) + " on mu1 (a1, a2 default to 1)", table_parameters(),
          [row](const Bindings& b) {
            return from_bialgebra(table_bialgebra(row, b.at("a1"), b.at("a2"), b.at("b1"), b.at("b2"), b.at("b3")));
          }};
}

}  // namespace

HomAlgebra algebra_mu1(const Scalar& a1, const Scalar& a2) {
  return HomAlgebra(unital_mul(1), LinearMap::from_rows({{a1, 0}, {a2 - a1, a2}}), Vector::basis(2, 0));
}

HomAlgebra algebra_mu2(const Scalar& a1, const Scalar& a2) {
  return HomAlgebra(unital_mul(0), LinearMap::from_rows({{a1, 0}, {a2, a1}}), Vector::basis(2, 0));
}

LinearMap table_beta(int row, const Scalar& b1, const Scalar& b2, const Scalar& b3) {
  switch (row) {
    case 1: return LinearMap::from_rows({{b1, 0}, {b3, b2}});
    case 2: return LinearMap::from_rows({{b1, (b1 - b3) / Scalar(2)}, {b2, b3}});
    case 3: return LinearMap::from_rows({{b1, b1 - b3}, {b2, b3}});
    default: throw std::invalid_argument("table row must be 1, 2 or 3");
  }
}

HomBialgebra table_bialgebra(int row, const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2,
                             const Scalar& b3) {
  return HomBialgebra(algebra_mu1(a1, a2), table_coalgebra(row, table_beta(row, b1, b2, b3)));
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries{
      {"algebra-mu1", StructureKind::algebra, "mu1 with twist [[a1, 0], [a2 - a1, a2]]", a_required(),
       [](const Bindings& b) { return from_algebra(algebra_mu1(b.at("a1"), b.at("a2"))); }},
      {"algebra-mu2", StructureKind::algebra, "mu2 (e2 e2 = 0) with twist [[a1, 0], [a2, a1]]", a_required(),
       [](const Bindings& b) { return from_algebra(algebra_mu2(b.at("a1"), b.at("a2"))); }},
      bialgebra_entry(1),
      bialgebra_entry(2),
      bialgebra_entry(3),
      {"hopf-2",
       StructureKind::hopf,
       "bialgebra-2 with antipode S = id (defaults a1 = a2 = b1 = b3 = 1, b2 = 0)",
       {{"a1", Scalar(1)}, {"a2", Scalar(1)}, {"b1", Scalar(1)}, {"b2", Scalar(0)}, {"b3", Scalar(1)}},
       [](const Bindings& b) {
         return from_hopf(HomHopf(table_bialgebra(2, b.at("a1"), b.at("a2"), b.at("b1"), b.at("b2"), b.at("b3")),
                                  LinearMap::identity(2)));
       }},
  };
  return entries;
}

const RegistryEntry& registry_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw UsageError("unknown registry entry: " + name);
}

}  // namespace homalg
