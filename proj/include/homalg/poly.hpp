#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

using Monomial = std::vector<unsigned>;

enum class MonomialOrder { grevlex, lex };

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// b / a, requires divides(a, b)
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial product(const Monomial& a, const Monomial& b);

// Variable names and a monomial order, shared by every Poly built over it.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  MonomialOrder order() const { return order_; }
  // negative, zero or positive as a <, =, > b
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex);

struct Term {
  Monomial mono;
  Scalar coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over Q, terms sorted by decreasing monomial, no zero coefficients.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly monomial(RingPtr ring, Monomial m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  unsigned degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  Poly operator-() const;
  Poly times_term(const Monomial& m, const Scalar& c) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  // Replaces variable i by value; the result lives in the same ring.
  Poly substitute(std::size_t i, const Scalar& value) const;
  // The same polynomial over another ring with identical variables.
  Poly in_ring(RingPtr ring) const;
  // Divides by the leading coefficient.
  Poly monic() const;
  // Whether only variable i occurs.
  bool is_univariate_in(std::size_t i) const;

  std::string str() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Poly& add_scaled(const Poly& o, const Scalar& s);
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace homalg
