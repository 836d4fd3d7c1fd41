#include "homalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homalg {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

PolyRing::PolyRing(std::vector<std::string> variables, MonomialOrder order)
    : names_(std::move(variables)), order_(order) {}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (order_ == MonomialOrder::grevlex) {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(variables), order);
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  const std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial(n), c);
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  Monomial m(ring->size());
  m.at(i) = 1;
  return monomial(std::move(ring), std::move(m), Scalar(1));
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("Poly::monomial: exponent length");
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0); }

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Poly& Poly::add_scaled(const Poly& o, const Scalar& s) {
  if (o.ring_->size() != ring_->size()) throw std::invalid_argument("Poly: ring mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back({o.terms_[j].mono, o.terms_[j].coef * s});
      ++j;
    } else {
      Scalar v = terms_[i].coef + o.terms_[j].coef * s;
      if (!v.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator+=(const Poly& o) { return add_scaled(o, Scalar(1)); }
Poly& Poly::operator-=(const Poly& o) { return add_scaled(o, Scalar(-1)); }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= s;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  return p *= Scalar(-1);
}

Poly Poly::times_term(const Monomial& m, const Scalar& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) p.terms_.push_back({product(t.mono, m), t.coef * c});
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.ring_);
  for (const auto& t : b.terms_) out += a.times_term(t.mono, t.coef);
  return out;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("Poly::evaluate: point length");
  Scalar sum;
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(std::size_t i, const Scalar& value) const {
  Poly out(ring_);
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    for (unsigned e = 0; e < t.mono[i]; ++e) c *= value;
    Monomial m = t.mono;
    m[i] = 0;
    out += monomial(ring_, std::move(m), c);
  }
  return out;
}

Poly Poly::in_ring(RingPtr ring) const {
  if (ring->size() != ring_->size()) throw std::invalid_argument("Poly::in_ring: variable count");
  Poly p(std::move(ring));
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return p.ring_->compare(a.mono, b.mono) > 0; });
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Scalar(1) / leading().coef);
}

bool Poly::is_univariate_in(std::size_t i) const {
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < t.mono.size(); ++v)
      if (v != i && t.mono[v] != 0) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    if (first) {
      if (c < Scalar(0)) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < Scalar(0) ? " - " : " + ");
      if (c < Scalar(0)) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      os << c;
    } else if (c.is_one()) {
      os << mono;
    } else {
      os << c << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace homalg
