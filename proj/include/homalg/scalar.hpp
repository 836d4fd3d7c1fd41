#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homalg {

// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  // Accepts "p", "-p", "p/q" with arbitrary-length integers.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Scalar& operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
  }
  // Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homalg
