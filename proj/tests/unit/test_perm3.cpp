#include <doctest.h>

#include "homalg/perm3.hpp"
#include "oracles.hpp"

using namespace homalg;

namespace {

std::array<int, 3> images(Perm3 p) {
  return {static_cast<int>(p(0)) + 1, static_cast<int>(p(1)) + 1, static_cast<int>(p(2)) + 1};
}

}  // namespace

TEST_CASE("named permutations follow cycle notation") {
  const auto& table = oracle::perm_images();
  const auto& all = Perm3::all();
  REQUIRE(all.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(all[i].name());
    CHECK(images(all[i]) == table[i]);
    CHECK(all[i].sign() == oracle::perm_sign(table[i]));
    CHECK(Perm3::parse(all[i].name()) == all[i]);
  }
  CHECK(Perm3::c213().sign() == 1);
  CHECK(Perm3::c231().sign() == 1);
  CHECK(Perm3::t13().sign() == -1);
}

TEST_CASE("composition table and inverses") {
  for (const Perm3 a : Perm3::all()) {
    CHECK(a * a.inverse() == Perm3::identity());
    for (const Perm3 b : Perm3::all()) {
      const Perm3 ab = a * b;
      for (std::size_t m = 0; m < 3; ++m) CHECK(ab(m) == a(b(m)));
      CHECK(ab.sign() == a.sign() * b.sign());
    }
  }
  CHECK(Perm3::c213() * Perm3::c213() == Perm3::c231());
  CHECK(Perm3::c213().inverse() == Perm3::c231());
  CHECK(Perm3::t12() * Perm3::t23() == Perm3::c231());
}

TEST_CASE("phi on pure tensors") {
  Tensor3 t(3);
  t(0, 1, 2) = 1;  // e1 (x) e2 (x) e3
  Tensor3 expected(3);
  expected(1, 0, 2) = 1;
  CHECK(phi_apply(Perm3::t12(), t) == expected);
  CHECK(phi_apply(Perm3::identity(), t) == t);
  Tensor3 e13(3);
  e13(2, 1, 0) = 1;
  CHECK(phi_apply(Perm3::t13(), t) == e13);
  // (213): x1 (x) x2 (x) x3 -> x2 (x) x3 (x) x1
  Tensor3 cyc(3);
  cyc(1, 2, 0) = 1;
  CHECK(phi_apply(Perm3::c213(), t) == cyc);
}

TEST_CASE("phi agrees with the index oracle and is an action") {
  RationalSampler rng(17);
  const auto& table = oracle::perm_images();
  for (std::size_t dim : {2u, 3u}) {
    for (int n = 0; n < 20; ++n) {
      const Tensor3 t = oracle::random_tensor3(rng, dim);
      for (std::size_t i = 0; i < 6; ++i) CHECK(phi_apply(Perm3::all()[i], t) == oracle::phi(table[i], t));
      CHECK(phi_apply(Perm3::c213(), phi_apply(Perm3::c213(), t)) == phi_apply(Perm3::c231(), t));
      for (const Perm3 a : Perm3::all())
        for (const Perm3 b : Perm3::all()) CHECK(phi_apply(a, phi_apply(b, t)) == phi_apply(a * b, t));
    }
  }
}

TEST_CASE("subgroups") {
  CHECK(elements(Subgroup::G1).size() == 1);
  CHECK(elements(Subgroup::G2) == std::vector<Perm3>{Perm3::identity(), Perm3::t12()});
  CHECK(elements(Subgroup::G3) == std::vector<Perm3>{Perm3::identity(), Perm3::t23()});
  CHECK(elements(Subgroup::G4) == std::vector<Perm3>{Perm3::identity(), Perm3::t13()});
  CHECK(elements(Subgroup::G5).size() == 3);
  CHECK(elements(Subgroup::G6).size() == 6);
  for (const Subgroup g : all_subgroups()) {
    const auto el = elements(g);
    for (const Perm3 a : el)
      for (const Perm3 b : el) CHECK(std::find(el.begin(), el.end(), a * b) != el.end());
    CHECK(parse_subgroup(to_string(g)) == g);
  }
  CHECK_THROWS(parse_subgroup("G7"));
  CHECK_THROWS(Perm3::parse("(14)"));

  RationalSampler rng(2);
  const Tensor3 t = oracle::random_tensor3(rng, 2);
  Tensor3 sum(2);
  for (std::size_t i = 0; i < 6; ++i) {
    Tensor3 term = oracle::phi(oracle::perm_images()[i], t);
    term *= Scalar(oracle::perm_sign(oracle::perm_images()[i]));
    sum += term;
  }
  CHECK(signed_orbit_sum(Subgroup::G6, t) == sum);
}
