#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

// Element of S3. Cycle names follow cycle notation: (213) sends 2->1->3->2,
// (231) sends 2->3->1->2. Composition is (a * b)(m) = a(b(m)).
class Perm3 {
 public:
  enum class Id : std::uint8_t { identity, t12, t13, t23, c213, c231 };

  constexpr Perm3() = default;
  constexpr explicit Perm3(Id id) : id_(id) {}

  static constexpr Perm3 identity() { return Perm3(Id::identity); }
  static constexpr Perm3 t12() { return Perm3(Id::t12); }
  static constexpr Perm3 t13() { return Perm3(Id::t13); }
  static constexpr Perm3 t23() { return Perm3(Id::t23); }
  static constexpr Perm3 c213() { return Perm3(Id::c213); }
  static constexpr Perm3 c231() { return Perm3(Id::c231); }
  static const std::array<Perm3, 6>& all();
  // Accepts "id", "(12)", "12", "(213)", ...
  static Perm3 parse(std::string_view name);

  Id id() const { return id_; }
  // Zero-based image of position m (m in 0..2).
  std::size_t operator()(std::size_t m) const;
  Perm3 inverse() const;
  int sign() const;
  std::string name() const;

  friend Perm3 operator*(Perm3 a, Perm3 b);
  friend constexpr bool operator==(Perm3, Perm3) = default;

 private:
  Id id_ = Id::identity;
};

// The six subgroups of S3.
enum class Subgroup : std::uint8_t { G1 = 1, G2, G3, G4, G5, G6 };

const std::array<Subgroup, 6>& all_subgroups();
std::vector<Perm3> elements(Subgroup g);
std::string to_string(Subgroup g);
Subgroup parse_subgroup(std::string_view name);

// Phi_sigma(x1 (x) x2 (x) x3) = x_{sigma^-1(1)} (x) x_{sigma^-1(2)} (x) x_{sigma^-1(3)}.
Tensor3 phi_apply(Perm3 sigma, const Tensor3& t);

// sum_{sigma in G} sign(sigma) Phi_sigma(t)
Tensor3 signed_orbit_sum(Subgroup g, const Tensor3& t);

}  // namespace homalg
