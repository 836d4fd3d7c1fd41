#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homalg/bialgebra.hpp"

namespace homalg {

enum class StructureKind { algebra, coalgebra, bialgebra, hopf };

std::string to_string(StructureKind k);

inline constexpr std::string_view kConvention = "columns-are-images";

// Malformed input: the message names the line and the field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// Well-formed JSON whose contents disagree with the kind or the dimension.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk form of a structure. mul[i][j][k] = C_ij^k, comul[k][i][j] = D_k^ij,
// maps are stored row-major with column j the image of e_j.
struct StructureFile {
  StructureKind kind = StructureKind::algebra;
  std::size_t dim = 0;
  std::optional<std::string> name;
  std::map<std::string, Scalar> parameters;
  std::optional<MulTensor> mul;
  std::optional<LinearMap> alpha;
  std::optional<Vector> unit;
  std::optional<ComulTensor> comul;
  std::optional<LinearMap> beta;
  std::optional<Covector> counit;
  std::optional<LinearMap> antipode;

  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

StructureFile parse_structure(std::string_view text);
std::string serialize_structure(const StructureFile& f);
StructureFile read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const StructureFile& f);

// Views of a file as library objects; throw SchemaError when components are missing.
HomAlgebra to_algebra(const StructureFile& f);
HomCoalgebra to_coalgebra(const StructureFile& f);
HomBialgebra to_bialgebra(const StructureFile& f);
HomHopf to_hopf(const StructureFile& f);

StructureFile from_algebra(const HomAlgebra& a, std::optional<std::string> name = std::nullopt);
StructureFile from_coalgebra(const HomCoalgebra& c, std::optional<std::string> name = std::nullopt);
StructureFile from_bialgebra(const HomBialgebra& b, std::optional<std::string> name = std::nullopt);
StructureFile from_hopf(const HomHopf& h, std::optional<std::string> name = std::nullopt);

}  // namespace homalg
