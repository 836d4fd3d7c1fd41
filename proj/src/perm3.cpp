#include "homalg/perm3.hpp"

#include <stdexcept>

namespace homalg {

namespace {

// images[id][m] = sigma(m), zero-based.
constexpr std::size_t kImages[6][3] = {
    {0, 1, 2},  // id
    {1, 0, 2},  // (12)
    {2, 1, 0},  // (13)
    {0, 2, 1},  // (23)
    {2, 0, 1},  // (213): 1->3, 2->1, 3->2
    {1, 2, 0},  // (231): 1->2, 2->3, 3->1
};

Perm3 from_images(std::size_t a, std::size_t b, std::size_t c) {
  for (const Perm3 p : Perm3::all()) {
    if (p(0) == a && p(1) == b && p(2) == c) return p;
  }
  throw std::logic_error("not a permutation");
}

}  // namespace

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> kAll = {identity(), t12(), t13(), t23(), c213(), c231()};
  return kAll;
}

Perm3 Perm3::parse(std::string_view name) {
  std::string s;
  for (char ch : name) {
    if (ch != '(' && ch != ')' && ch != ' ') s.push_back(ch);
  }
  if (s == "id" || s == "Id" || s == "e") return identity();
  if (s == "12" || s == "21") return t12();
  if (s == "13" || s == "31") return t13();
  if (s == "23" || s == "32") return t23();
  // three-cycles written in any rotation
  if (s == "213" || s == "132" || s == "321") return c213();
  if (s == "231" || s == "123" || s == "312") return c231();
  throw std::invalid_argument("unknown permutation \"" + std::string(name) + "\"");
}

std::size_t Perm3::operator()(std::size_t m) const { return kImages[static_cast<int>(id_)][m]; }

Perm3 Perm3::inverse() const {
  std::size_t inv[3];
  for (std::size_t m = 0; m < 3; ++m) inv[(*this)(m)] = m;
  return from_images(inv[0], inv[1], inv[2]);
}

int Perm3::sign() const {
  switch (id_) {
    case Id::identity:
    case Id::c213:
    case Id::c231:
      return 1;
    default:
      return -1;
  }
}

std::string Perm3::name() const {
  static const char* const kNames[6] = {"id", "(12)", "(13)", "(23)", "(213)", "(231)"};
  return kNames[static_cast<int>(id_)];
}

Perm3 operator*(Perm3 a, Perm3 b) { return from_images(a(b(0)), a(b(1)), a(b(2))); }

const std::array<Subgroup, 6>& all_subgroups() {
  static const std::array<Subgroup, 6> kAll = {Subgroup::G1, Subgroup::G2, Subgroup::G3,
                                               Subgroup::G4, Subgroup::G5, Subgroup::G6};
  return kAll;
}

std::vector<Perm3> elements(Subgroup g) {
  switch (g) {
    case Subgroup::G1:
      return {Perm3::identity()};
    case Subgroup::G2:
      return {Perm3::identity(), Perm3::t12()};
    case Subgroup::G3:
      return {Perm3::identity(), Perm3::t23()};
    case Subgroup::G4:
      return {Perm3::identity(), Perm3::t13()};
    case Subgroup::G5:
      return {Perm3::identity(), Perm3::c213(), Perm3::c231()};
    case Subgroup::G6:
      return {Perm3::all().begin(), Perm3::all().end()};
  }
  throw std::logic_error("bad subgroup");
}

std::string to_string(Subgroup g) { return "G" + std::to_string(static_cast<int>(g)); }

Subgroup parse_subgroup(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'G' || name[0] == 'g') && name[1] >= '1' && name[1] <= '6') {
    return static_cast<Subgroup>(name[1] - '0');
  }
  throw std::invalid_argument("unknown subgroup \"" + std::string(name) + "\" (expected G1..G6)");
}

Tensor3 phi_apply(Perm3 sigma, const Tensor3& t) {
  require_dims(t.is_cubic(), "Phi acts on V (x) V (x) V");
  const std::size_t n = t.extent(0);
  Tensor3 out(n);
  std::size_t idx[3];
  for (idx[0] = 0; idx[0] < n; ++idx[0]) {
    for (idx[1] = 0; idx[1] < n; ++idx[1]) {
      for (idx[2] = 0; idx[2] < n; ++idx[2]) {
        // factor m of the input lands in slot sigma(m)
        std::size_t o[3];
        for (std::size_t m = 0; m < 3; ++m) o[sigma(m)] = idx[m];
        out(o[0], o[1], o[2]) = t(idx[0], idx[1], idx[2]);
      }
    }
  }
  return out;
}

Tensor3 signed_orbit_sum(Subgroup g, const Tensor3& t) {
  Tensor3 sum(t.extent(0));
  for (const Perm3 sigma : elements(g)) {
    if (sigma.sign() > 0) {
      sum += phi_apply(sigma, t);
    } else {
      sum -= phi_apply(sigma, t);
    }
  }
  return sum;
}

}  // namespace homalg
