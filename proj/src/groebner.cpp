#include "homalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homalg {

namespace {

struct Element {
  Poly p;
  std::vector<Poly> cof;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

// Reduces e in place by the basis; cofactors follow every step.
void reduce(Element& e, const std::vector<Element>& g, bool track) {
  const RingPtr& ring = e.p.ring();
  Poly rem(ring);
  while (!e.p.is_zero()) {
    const Term lt = e.p.leading();
    const Element* div = nullptr;
    for (const auto& h : g) {
      if (divides(h.p.leading().mono, lt.mono)) {
        div = &h;
        break;
      }
    }
    if (div == nullptr) {
      const Poly head = Poly::monomial(ring, lt.mono, lt.coef);
      rem += head;
      e.p -= head;
      continue;
    }
    const Monomial q = quotient(lt.mono, div->p.leading().mono);
    const Scalar c = lt.coef / div->p.leading().coef;
    e.p -= div->p.times_term(q, c);
    if (track) {
      for (std::size_t k = 0; k < e.cof.size(); ++k) e.cof[k] -= div->cof[k].times_term(q, c);
    }
  }
  e.p = std::move(rem);
}

void scale(Element& e, const Scalar& s) {
  e.p *= s;
  for (auto& c : e.cof) c *= s;
}

std::vector<Poly> finish_basis(std::vector<Element> g) {
  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[j].p.leading().mono;
      const Monomial& b = g[i].p.leading().mono;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].p);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return a.ring()->compare(a.leading().mono, b.leading().mono) < 0;
  });
  return reduced;
}

GroebnerResult unit_result(const std::vector<Poly>& generators, Element e, bool track) {
  GroebnerResult out;
  const RingPtr& ring = e.p.ring();
  const Scalar c = e.p.leading().coef;
  out.basis = {Poly::constant(ring, Scalar(1))};
  if (track) {
    scale(e, Scalar(1) / c);
    if (!certificate_recombines(generators, e.cof)) {
      throw std::logic_error("buchberger: certificate does not recombine to 1");
    }
    out.certificate = std::move(e.cof);
  }
  return out;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& g) {
  Element e{p, {}};
  std::vector<Element> basis;
  basis.reserve(g.size());
  for (const auto& h : g)
    if (!h.is_zero()) basis.push_back({h, {}});
  reduce(e, basis, false);
  return e.p;
}

bool certificate_recombines(const std::vector<Poly>& generators, const std::vector<Poly>& cofactors) {
  if (generators.empty() || generators.size() != cofactors.size()) return false;
  const RingPtr& ring = generators.front().ring();
  Poly sum(ring);
  for (std::size_t i = 0; i < generators.size(); ++i) sum += cofactors[i] * generators[i];
  return sum == Poly::constant(ring, Scalar(1));
}

GroebnerResult buchberger(const std::vector<Poly>& generators, const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("buchberger: no generators");
  const RingPtr ring = generators.front().ring();
  for (const auto& f : generators) {
    if (f.ring()->size() != ring->size()) throw std::invalid_argument("buchberger: generators over different rings");
  }
  const bool track = options.track_cofactors;
  const std::size_t m = generators.size();

  std::vector<Element> g;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  const auto add = [&](Element e) {
    scale(e, Scalar(1) / e.p.leading().coef);
    const std::size_t k = g.size();
    g.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(g[i].p.leading().mono, g[k].p.leading().mono);
      const unsigned d = total_degree(l);
      pending.push_back({i, k, std::move(l), d});
      open.insert({i, k});
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    Element e{generators[i], {}};
    if (track) {
      e.cof.assign(m, Poly(ring));
      e.cof[i] = Poly::constant(ring, Scalar(1));
    }
    reduce(e, g, track);
    if (e.p.is_zero()) continue;
    if (e.p.is_constant()) return unit_result(generators, std::move(e), track);
    add(std::move(e));
  }

  GroebnerResult out;
  std::set<std::pair<std::size_t, std::size_t>> deferred;
  while (!pending.empty()) {
    // normal strategy: smallest lcm first, pairs above the degree cap are deferred
    std::size_t best = pending.size();
    for (std::size_t p = 0; p < pending.size(); ++p) {
      if (pending[p].degree > options.degree_cap) continue;
      if (best == pending.size() || pending[p].degree < pending[best].degree ||
          (pending[p].degree == pending[best].degree && ring->compare(pending[p].lcm, pending[best].lcm) < 0)) {
        best = p;
      }
    }
    if (best == pending.size()) {
      // every remaining pair exceeds the cap; coprime ones would reduce to zero anyway
      for (const auto& p : pending)
        if (product(g[p.i].p.leading().mono, g[p.j].p.leading().mono) != p.lcm) deferred.insert({p.i, p.j});
      break;
    }
    const Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    open.erase({pr.i, pr.j});

    const Monomial& li = g[pr.i].p.leading().mono;
    const Monomial& lj = g[pr.j].p.leading().mono;
    if (product(li, lj) == pr.lcm) continue;  // coprime leading monomials
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !divides(g[k].p.leading().mono, pr.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!open.count(key(pr.i, k)) && !open.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    if (out.pairs_reduced >= options.pair_cap) {
      out.capped = true;
      out.cap_reason = "pair cap " + std::to_string(options.pair_cap) + " reached";
      break;
    }
    ++out.pairs_reduced;

    // g_i, g_j are monic
    const Monomial qi = quotient(pr.lcm, li), qj = quotient(pr.lcm, lj);
    Element s{g[pr.i].p.times_term(qi, Scalar(1)) - g[pr.j].p.times_term(qj, Scalar(1)), {}};
    if (track) {
      s.cof.resize(m, Poly(ring));
      for (std::size_t k = 0; k < m; ++k)
        s.cof[k] = g[pr.i].cof[k].times_term(qi, Scalar(1)) - g[pr.j].cof[k].times_term(qj, Scalar(1));
    }
    reduce(s, g, track);
    if (s.p.is_zero()) continue;
    if (s.p.is_constant()) {
      GroebnerResult unit = unit_result(generators, std::move(s), track);
      unit.pairs_reduced = out.pairs_reduced;
      return unit;
    }
    add(std::move(s));
  }

  if (!out.capped && !deferred.empty()) {
    out.capped = true;
    out.cap_reason = "degree cap " + std::to_string(options.degree_cap) + " exceeded by " +
                     std::to_string(deferred.size()) + " S-pairs";
  }
  if (out.capped) {
    for (auto& e : g) out.basis.push_back(e.p);
  } else {
    out.basis = finish_basis(std::move(g));
  }
  return out;
}

bool zero_dimensional(const std::vector<Poly>& basis) {
  if (basis.empty()) return false;
  const std::size_t n = basis.front().ring()->size();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& p : basis) {
      const Monomial& lm = p.leading().mono;
      bool pure = lm[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && lm[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Coefficients by degree, ascending.
std::vector<Scalar> horner(const std::vector<Scalar>& c, const Scalar& r, Scalar* value) {
  // synthetic division by (x - r)
  const std::size_t d = c.size() - 1;
  std::vector<Scalar> q(d);
  Scalar acc = c[d];
  for (std::size_t k = d; k-- > 0;) {
    q[k] = acc;
    acc = acc * r + c[k];
  }
  *value = acc;
  return q;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& p, std::size_t var, bool* rest_nonconstant) {
  if (!p.is_univariate_in(var)) throw std::invalid_argument("rational_roots: not univariate");
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Scalar> c(p.degree() + 1);
  for (const auto& t : p.terms()) c[t.mono[var]] = t.coef;

  std::vector<Scalar> roots;
  // x = 0
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Scalar(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (c.size() > 1) {
    mpz_class den = 1;
    for (const auto& s : c) den = lcm(den, s.denominator());
    const mpz_class a0 = mpq_class(c.front().raw() * den).get_num();
    const mpz_class an = mpq_class(c.back().raw() * den).get_num();
    const std::vector<mpz_class> ps = divisors(a0), qs = divisors(an);
    std::set<Scalar> candidates;
    for (const auto& pn : ps)
      for (const auto& qn : qs) {
        const mpq_class r(pn, qn);
        candidates.insert(Scalar(mpq_class(r)));
        candidates.insert(Scalar(mpq_class(-r)));
      }
    for (const auto& r : candidates) {
      if (c.size() <= 1) break;
      Scalar value;
      std::vector<Scalar> q = horner(c, r, &value);
      if (!value.is_zero()) continue;
      roots.push_back(r);
      c = std::move(q);
      // deflate repeated roots
      while (c.size() > 1) {
        q = horner(c, r, &value);
        if (!value.is_zero()) break;
        c = std::move(q);
      }
    }
  }
  if (rest_nonconstant != nullptr) *rest_nonconstant = c.size() > 1;
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct Enumeration {
  GroebnerOptions options;
  std::vector<std::vector<Scalar>> points;
  bool nonrational = false;
  std::optional<std::string> failure;

  void run(const std::vector<Poly>& polys, std::vector<Scalar>& point, std::size_t remaining) {
    if (failure) return;
    if (remaining == 0) {
      for (const auto& p : polys)
        if (!p.is_zero()) return;
      points.push_back(point);
      return;
    }
    std::vector<Poly> nonzero;
    for (const auto& p : polys)
      if (!p.is_zero()) nonzero.push_back(p);
    std::vector<Poly> basis;
    if (nonzero.empty()) {
      failure = "positive-dimensional fibre during enumeration";
      return;
    }
    GroebnerResult gb = buchberger(nonzero, options);
    if (gb.capped) {
      failure = "lex elimination capped: " + gb.cap_reason;
      return;
    }
    if (gb.unit_ideal()) return;
    // lex with x0 > x1 > ...: the elimination polynomial lives in the last unassigned variable
    const std::size_t v = remaining - 1;
    const Poly* uni = nullptr;
    for (const auto& p : gb.basis)
      if (p.is_univariate_in(v) && !p.is_constant()) uni = &p;
    if (uni == nullptr) {
      failure = "no elimination polynomial in " + gb.basis.front().ring()->name(v);
      return;
    }
    bool rest = false;
    const std::vector<Scalar> roots = rational_roots(*uni, v, &rest);
    nonrational = nonrational || rest;
    for (const auto& r : roots) {
      std::vector<Poly> sub;
      for (const auto& p : gb.basis) sub.push_back(p.substitute(v, r));
      point[v] = r;
      run(sub, point, remaining - 1);
    }
  }
};

}  // namespace

SystemVerdict solve_system(const std::vector<Poly>& generators, const GroebnerOptions& options) {
  if (generators.empty()) throw std::invalid_argument("solve_system: no generators");
  const RingPtr& given = generators.front().ring();
  const RingPtr grevlex = make_ring(given->variables(), MonomialOrder::grevlex);
  std::vector<Poly> gens;
  for (const auto& g : generators) gens.push_back(g.in_ring(grevlex));

  const GroebnerResult gb = buchberger(gens, options);
  if (gb.unit_ideal()) {
    if (!gb.certificate) return Inconsistent{};
    std::vector<Poly> cof;
    for (const auto& c : *gb.certificate) cof.push_back(c.in_ring(given));
    return Inconsistent{std::move(cof)};
  }
  if (gb.capped) return Inconclusive{gb.cap_reason};
  if (!zero_dimensional(gb.basis)) return PositiveDimensional{gb.basis};

  const RingPtr lex = make_ring(given->variables(), MonomialOrder::lex);
  Enumeration en;
  en.options = options;
  en.options.track_cofactors = false;
  std::vector<Poly> start;
  for (const auto& p : gb.basis) start.push_back(p.in_ring(lex));
  std::vector<Scalar> point(given->size());
  en.run(start, point, given->size());
  if (en.failure) return Inconclusive{*en.failure};

  for (const auto& pt : en.points)
    for (const auto& g : generators)
      if (!g.evaluate(pt).is_zero()) throw std::logic_error("solve_system: enumerated point fails a generator");
  std::sort(en.points.begin(), en.points.end());
  return RationalSolutions{std::move(en.points), en.nonrational};
}

std::string describe(const SystemVerdict& v) {
  std::ostringstream os;
  if (const auto* s = std::get_if<RationalSolutions>(&v)) {
    os << "solutions: " << s->points.size() << " rational point(s)";
    if (s->nonrational_omitted) os << " (non-rational points omitted)";
  } else if (const auto* c = std::get_if<Inconsistent>(&v)) {
    os << "inconsistent";
    if (!c->cofactors.empty()) os << " (certificate with " << c->cofactors.size() << " cofactors recombines to 1)";
  } else if (const auto* p = std::get_if<PositiveDimensional>(&v)) {
    os << "solutions exist (positive-dimensional, Groebner basis of " << p->basis.size() << " elements)";
  } else {
    os << "inconclusive: " << std::get<Inconclusive>(v).reason;
  }
  return os.str();
}

}  // namespace homalg
