#include <doctest.h>

#include <sstream>

#include "homalg/random.hpp"
#include "homalg/scalar.hpp"

using homalg::Scalar;

TEST_CASE("scalars are stored in lowest terms with positive denominator") {
  const Scalar s(6, -4);
  CHECK(s.numerator() == -3);
  CHECK(s.denominator() == 2);
  CHECK(s.str() == "-3/2");
  CHECK(Scalar(4, 2).str() == "2");
  CHECK(Scalar(0, -7).str() == "0");
  CHECK(Scalar(4, 2).is_integer());
  CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Scalar::parse("1/3") == Scalar(1, 3));
  CHECK(Scalar::parse("-2/6") == Scalar(-1, 3));
  CHECK(Scalar::parse("17") == Scalar(17));
  CHECK(Scalar::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", "/3", "3/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(1, 2) * Scalar(2, 3) == Scalar(1, 3));
  CHECK(Scalar(1, 3) - Scalar(1, 3) == Scalar(0));
  CHECK(Scalar(3, 4) / Scalar(3, 2) == Scalar(1, 2));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(Scalar(-1, 2) < Scalar(1, 3));
  std::ostringstream os;
  os << Scalar(-7, 21);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("field axioms on random rationals") {
  homalg::RationalSampler rng(11);
  for (int n = 0; n < 200; ++n) {
    const Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Scalar::parse((a / Scalar(7)).str()) == a / Scalar(7));
  }
}
