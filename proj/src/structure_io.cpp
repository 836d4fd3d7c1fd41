#include "homalg/structure_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace homalg {

using nlohmann::json;

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::algebra: return "algebra";
    case StructureKind::coalgebra: return "coalgebra";
    case StructureKind::bialgebra: return "bialgebra";
    case StructureKind::hopf: return "hopf";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::size_t line_at(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Offset of the first occurrence of the key, npos when absent.
std::size_t key_offset(std::string_view text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') return pos;
    pos = after;
  }
  return std::string_view::npos;
}

// Line of the first occurrence of the key, 1 when absent.
std::size_t line_of_key(std::string_view text, const std::string& key) {
  const std::size_t pos = key_offset(text, key);
  return pos == std::string_view::npos ? 1 : line_at(text, pos);
}

// Line of the first occurrence of the literal after the key.
std::size_t line_of_value(std::string_view text, const std::string& key, const std::string& literal) {
  const std::size_t start = key_offset(text, key);
  if (start == std::string_view::npos) return 1;
  const std::size_t pos = text.find(literal, start);
  return pos == std::string_view::npos ? line_at(text, start) : line_at(text, pos);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError(line_of_key(text_, field), field, what);
  }

  Scalar scalar(const json& j, const std::string& field) const {
    if (j.is_string()) {
      try {
        return Scalar::parse(j.get<std::string>());
      } catch (const std::exception& e) {
        const std::string lit = j.dump();
        throw ParseError(line_of_value(text_, field, lit), field, "bad rational " + lit);
      }
    }
    if (j.is_number_integer()) return Scalar(j.get<long>());
    fail(field, "expected a rational string such as \"1/3\"");
  }

  const json& array(const json& j, const std::string& field, std::size_t extent) const {
    if (!j.is_array()) fail(field, "expected an array");
    if (j.size() != extent) {
      throw SchemaError("field '" + field + "' (line " + std::to_string(line_of_key(text_, field)) + "): expected " +
                        std::to_string(extent) + " entries, found " + std::to_string(j.size()));
    }
    return j;
  }

  Vector vector(const json& j, const std::string& field, std::size_t n) const {
    array(j, field, n);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar(j[i], field);
    return v;
  }

  LinearMap map(const json& j, const std::string& field, std::size_t n) const {
    array(j, field, n);
    LinearMap m(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Vector row = vector(j[r], field, n);
      for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    return m;
  }

  template <class T>
  T tensor(const json& j, const std::string& field, std::size_t n) const {
    array(j, field, n);
    T t(n);
    for (std::size_t a = 0; a < n; ++a) {
      array(j[a], field, n);
      for (std::size_t b = 0; b < n; ++b) {
        const Vector v = vector(j[a][b], field, n);
        for (std::size_t c = 0; c < n; ++c) t(a, b, c) = v[c];
      }
    }
    return t;
  }

 private:
  std::string_view text_;
};

json scalar_json(const Scalar& s) { return s.str(); }

json vector_json(const Vector& v) {
  json j = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) j.push_back(scalar_json(v[i]));
  return j;
}

template <class T>
json tensor_json(const T& t) {
  const std::size_t n = t.extent(0);
  json j = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json ja = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      json jb = json::array();
      for (std::size_t c = 0; c < n; ++c) jb.push_back(scalar_json(t(a, b, c)));
      ja.push_back(std::move(jb));
    }
    j.push_back(std::move(ja));
  }
  return j;
}

json map_json_row(const LinearMap& m, std::size_t r) {
  json row = json::array();
  for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(scalar_json(m(r, c)));
  return row;
}

void write_map(std::ostringstream& os, const std::string& key, const LinearMap& m) {
  os << ",\n  \"" << key << "\": [\n";
  for (std::size_t r = 0; r < m.dim(); ++r) os << "    " << map_json_row(m, r).dump() << (r + 1 < m.dim() ? ",\n" : "\n");
  os << "  ]";
}

template <class T>
void write_tensor(std::ostringstream& os, const std::string& key, const T& t) {
  const json j = tensor_json(t);
  os << ",\n  \"" << key << "\": [\n";
  for (std::size_t a = 0; a < j.size(); ++a) os << "    " << j[a].dump() << (a + 1 < j.size() ? ",\n" : "\n");
  os << "  ]";
}

void require(bool present, const StructureFile& f, const std::string& field) {
  if (!present) throw SchemaError("kind '" + to_string(f.kind) + "' requires field '" + field + "'");
}

}  // namespace

StructureFile parse_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_at(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, "<document>", e.what());
  }
  const Reader rd(text);
  if (!j.is_object()) throw ParseError(1, "<document>", "top level must be an object");

  static const std::set<std::string> known{"kind", "name", "dim", "convention", "parameters", "mul", "alpha",
                                           "unit", "comul", "beta", "counit", "antipode"};
  for (const auto& item : j.items())
    if (!known.count(item.key())) rd.fail(item.key(), "unknown field");

  StructureFile f;
  if (!j.contains("kind") || !j["kind"].is_string()) rd.fail("kind", "missing or not a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "algebra") f.kind = StructureKind::algebra;
  else if (kind == "coalgebra") f.kind = StructureKind::coalgebra;
  else if (kind == "bialgebra") f.kind = StructureKind::bialgebra;
  else if (kind == "hopf") f.kind = StructureKind::hopf;
  else rd.fail("kind", "unknown kind \"" + kind + "\"");

  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
    rd.fail("dim", "missing or not a positive integer");
  }
  f.dim = j["dim"].get<std::size_t>();
  const std::size_t n = f.dim;

  if (!j.contains("convention") || !j["convention"].is_string()) rd.fail("convention", "missing or not a string");
  if (j["convention"].get<std::string>() != kConvention) {
    throw SchemaError("convention must be \"" + std::string(kConvention) + "\"");
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) rd.fail("name", "expected a string");
    f.name = j["name"].get<std::string>();
  }
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) rd.fail("parameters", "expected an object");
    for (const auto& item : j["parameters"].items()) f.parameters[item.key()] = rd.scalar(item.value(), "parameters");
  }
  if (j.contains("mul")) f.mul = rd.tensor<MulTensor>(j["mul"], "mul", n);
  if (j.contains("alpha")) f.alpha = rd.map(j["alpha"], "alpha", n);
  if (j.contains("unit")) f.unit = rd.vector(j["unit"], "unit", n);
  if (j.contains("comul")) f.comul = rd.tensor<ComulTensor>(j["comul"], "comul", n);
  if (j.contains("beta")) f.beta = rd.map(j["beta"], "beta", n);
  if (j.contains("counit")) f.counit = rd.vector(j["counit"], "counit", n);
  if (j.contains("antipode")) f.antipode = rd.map(j["antipode"], "antipode", n);

  const bool needs_algebra = f.kind != StructureKind::coalgebra;
  const bool needs_coalgebra = f.kind != StructureKind::algebra;
  const bool bi = f.kind == StructureKind::bialgebra || f.kind == StructureKind::hopf;
  if (needs_algebra) {
    require(f.mul.has_value(), f, "mul");
    require(f.alpha.has_value(), f, "alpha");
  } else if (f.mul || f.alpha || f.unit) {
    throw SchemaError("kind 'coalgebra' does not take mul/alpha/unit");
  }
  if (needs_coalgebra) {
    require(f.comul.has_value(), f, "comul");
    require(f.beta.has_value(), f, "beta");
  } else if (f.comul || f.beta || f.counit) {
    throw SchemaError("kind 'algebra' does not take comul/beta/counit");
  }
  if (bi) {
    require(f.unit.has_value(), f, "unit");
    require(f.counit.has_value(), f, "counit");
  }
  if (f.kind == StructureKind::hopf) require(f.antipode.has_value(), f, "antipode");
  else if (f.antipode) throw SchemaError("only kind 'hopf' takes an antipode");
  return f;
}

std::string serialize_structure(const StructureFile& f) {
  std::ostringstream os;
  os << "{\n  \"kind\": " << json(to_string(f.kind)).dump();
  if (f.name) os << ",\n  \"name\": " << json(*f.name).dump();
  os << ",\n  \"dim\": " << f.dim;
  os << ",\n  \"convention\": " << json(std::string(kConvention)).dump();
  if (!f.parameters.empty()) {
    json p = json::object();
    for (const auto& [k, v] : f.parameters) p[k] = v.str();
    os << ",\n  \"parameters\": " << p.dump();
  }
  if (f.mul) write_tensor(os, "mul", *f.mul);
  if (f.alpha) write_map(os, "alpha", *f.alpha);
  if (f.unit) os << ",\n  \"unit\": " << vector_json(*f.unit).dump();
  if (f.comul) write_tensor(os, "comul", *f.comul);
  if (f.beta) write_map(os, "beta", *f.beta);
  if (f.counit) os << ",\n  \"counit\": " << vector_json(*f.counit).dump();
  if (f.antipode) write_map(os, "antipode", *f.antipode);
  os << "\n}\n";
  return os.str();
}

StructureFile read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

void write_structure_file(const std::string& path, const StructureFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_structure(f);
}

HomAlgebra to_algebra(const StructureFile& f) {
  require(f.mul && f.alpha, f, "mul/alpha");
  return HomAlgebra(*f.mul, *f.alpha, f.unit);
}

HomCoalgebra to_coalgebra(const StructureFile& f) {
  require(f.comul && f.beta, f, "comul/beta");
  return HomCoalgebra(*f.comul, *f.beta, f.counit);
}

HomBialgebra to_bialgebra(const StructureFile& f) {
  require(f.unit && f.counit, f, "unit/counit");
  return HomBialgebra(to_algebra(f), to_coalgebra(f));
}

HomHopf to_hopf(const StructureFile& f) {
  require(f.antipode.has_value(), f, "antipode");
  return HomHopf(to_bialgebra(f), *f.antipode);
}

StructureFile from_algebra(const HomAlgebra& a, std::optional<std::string> name) {
  StructureFile f;
  f.kind = StructureKind::algebra;
  f.dim = a.dim();
  f.name = std::move(name);
  f.mul = a.mul();
  f.alpha = a.alpha();
  f.unit = a.unit();
  return f;
}

StructureFile from_coalgebra(const HomCoalgebra& c, std::optional<std::string> name) {
  StructureFile f;
  f.kind = StructureKind::coalgebra;
  f.dim = c.dim();
  f.name = std::move(name);
  f.comul = c.comul();
  f.beta = c.beta();
  f.counit = c.counit();
  return f;
}

StructureFile from_bialgebra(const HomBialgebra& b, std::optional<std::string> name) {
  StructureFile f = from_algebra(b.algebra(), std::move(name));
  f.kind = StructureKind::bialgebra;
  f.comul = b.coalgebra().comul();
  f.beta = b.coalgebra().beta();
  f.counit = b.coalgebra().counit();
  return f;
}

StructureFile from_hopf(const HomHopf& h, std::optional<std::string> name) {
  StructureFile f = from_bialgebra(h.bialgebra(), std::move(name));
  f.kind = StructureKind::hopf;
  f.antipode = h.antipode();
  return f;
}

}  // namespace homalg
