#include "homalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace homalg {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Scalar: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  if (slash == std::string_view::npos) return Scalar(mpq_class(parse_integer(num)));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(mpq_class(parse_integer(num), d));
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homalg
