#include "homalg/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace homalg {

namespace {

struct Symbolic {
  RingPtr ring;
  std::size_t n = 2;
  // D[k][i][j] and eps[k]
  std::vector<std::vector<std::vector<Poly>>> d;
  std::vector<Poly> eps;
  std::vector<std::vector<Poly>> beta;

  Poly c(const Scalar& s) const { return Poly::constant(ring, s); }
};

Symbolic make_symbolic(const RingPtr& ring, bool with_beta) {
  Symbolic s;
  s.ring = ring;
  const Poly zero(ring);
  s.d.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, zero)));
  s.d[0][0][0] = s.c(1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s.d[1][i][j] = Poly::variable(ring, i * 2 + j);
  s.eps = {s.c(1), Poly::variable(ring, 4)};
  if (with_beta) {
    s.beta.assign(2, std::vector<Poly>(2, zero));
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t col = 0; col < 2; ++col) s.beta[r][col] = Poly::variable(ring, 5 + r * 2 + col);
  }
  return s;
}

void push(std::vector<Poly>& out, const Poly& p) {
  if (p.is_zero()) return;
  const Poly m = p.monic();
  for (const auto& q : out)
    if (q.monic() == m) return;
  out.push_back(p);
}

void weak_conditions(const HomAlgebra& a, const Symbolic& s, std::vector<Poly>& out) {
  const std::size_t n = s.n;
  const MulTensor& mu = a.mul();
  // Delta(e_i e_j) = Delta(e_i) . Delta(e_j), eps(e_i e_j) = eps(e_i) eps(e_j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Poly lhs(s.ring), rhs(s.ring);
          for (std::size_t k = 0; k < n; ++k) lhs += mu(i, j, k) * s.d[k][p][q];
          for (std::size_t ai = 0; ai < n; ++ai)
            for (std::size_t bi = 0; bi < n; ++bi)
              for (std::size_t cj = 0; cj < n; ++cj)
                for (std::size_t dj = 0; dj < n; ++dj) {
                  const Scalar k = mu(ai, cj, p) * mu(bi, dj, q);
                  if (!k.is_zero()) rhs += k * (s.d[i][ai][bi] * s.d[j][cj][dj]);
                }
          push(out, lhs - rhs);
        }
      Poly lhs(s.ring);
      for (std::size_t k = 0; k < n; ++k) lhs += mu(i, j, k) * s.eps[k];
      push(out, lhs - s.eps[i] * s.eps[j]);
    }
  // counit: sum eps(x1) x2 = x = sum x1 eps(x2)
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p) {
      Poly left(s.ring), right(s.ring);
      for (std::size_t i = 0; i < n; ++i) {
        left += s.eps[i] * s.d[k][i][p];
        right += s.eps[i] * s.d[k][p][i];
      }
      const Poly target = s.c(k == p ? 1 : 0);
      push(out, left - target);
      push(out, right - target);
    }
}

void strict_conditions(const HomAlgebra& a, const Symbolic& s, std::vector<Poly>& out) {
  const std::size_t n = s.n;
  const LinearMap& al = a.alpha();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Poly lhs(s.ring), rhs(s.ring);
        for (std::size_t m = 0; m < n; ++m) lhs += al(m, k) * s.d[m][p][q];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rhs += (al(p, i) * al(q, j)) * s.d[k][i][j];
        push(out, lhs - rhs);
      }
    Poly lhs(s.ring);
    for (std::size_t m = 0; m < n; ++m) lhs += al(m, k) * s.eps[m];
    push(out, lhs - s.eps[k]);
  }
}

void beta_conditions(const Symbolic& s, std::vector<Poly>& out) {
  const std::size_t n = s.n;
  // (beta (x) Delta) Delta = (Delta (x) beta) Delta on each e_k
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          Poly diff(s.ring);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              diff += s.d[k][i][j] * s.beta[p][i] * s.d[j][q][r];
              diff -= s.d[k][i][j] * s.d[i][p][q] * s.beta[r][j];
            }
          push(out, diff);
        }
}

}  // namespace

std::vector<Poly> extension_system(const HomAlgebra& a, ExtensionReading reading) {
  if (a.dim() != 2) throw std::invalid_argument("search_bialgebra_extension: dimension must be 2");
  if (!a.unit() || *a.unit() != Vector::basis(2, 0) || check_unital(a) != UnitCheck::unital) {
    throw std::invalid_argument("search_bialgebra_extension: e1 must be the unit");
  }
  const bool with_beta = reading == ExtensionReading::with_beta;
  const RingPtr ring = make_ring(with_beta ? extension_variables_with_beta() : extension_variables());
  const Symbolic s = make_symbolic(ring, with_beta);
  std::vector<Poly> out;
  weak_conditions(a, s, out);
  if (reading == ExtensionReading::strict) strict_conditions(a, s, out);
  if (with_beta) beta_conditions(s, out);
  return out;
}

namespace {

SystemVerdict solve_or_trivial(const std::vector<Poly>& system, const RingPtr& ring, const GroebnerOptions& options) {
  if (system.empty()) return PositiveDimensional{{Poly(ring)}};
  return solve_system(system, options);
}

}  // namespace

ExtensionSearch search_bialgebra_extension(const HomAlgebra& a, const GroebnerOptions& options) {
  ExtensionSearch out{extension_system(a, ExtensionReading::weak), Inconclusive{}, {}, Inconclusive{}, {}, {}};
  const RingPtr ring = make_ring(extension_variables());
  out.weak = solve_or_trivial(out.weak_system, ring, options);
  out.strict_system = extension_system(a, ExtensionReading::strict);
  out.strict = solve_or_trivial(out.strict_system, ring, options);
  if (is_consistent(out.weak)) {
    out.beta_system = extension_system(a, ExtensionReading::with_beta);
    out.beta = solve_or_trivial(*out.beta_system, make_ring(extension_variables_with_beta()), options);
  }
  return out;
}

HomCoalgebra extension_coalgebra(const std::vector<Scalar>& point, const LinearMap& beta) {
  if (point.size() < 5) throw std::invalid_argument("extension_coalgebra: point needs 5 coordinates");
  ComulTensor d(2);
  d(0, 0, 0) = 1;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) d(1, i, j) = point[i * 2 + j];
  return HomCoalgebra(d, beta, Covector{Scalar(1), point[4]});
}

bool is_consistent(const SystemVerdict& v) {
  if (const auto* s = std::get_if<RationalSolutions>(&v)) return !s->points.empty() || s->nonrational_omitted;
  return std::holds_alternative<PositiveDimensional>(v);
}

bool is_definitive(const SystemVerdict& v) { return !std::holds_alternative<Inconclusive>(v); }

}  // namespace homalg
