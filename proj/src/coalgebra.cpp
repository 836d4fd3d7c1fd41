#include "homalg/coalgebra.hpp"

namespace homalg {

namespace {

void require_comul(const ComulTensor& d, std::size_t dim, const char* what) {
  require_dims(d.extent(0) == dim && d.extent(1) == dim && d.extent(2) == dim, what);
}

DefectReport report_nonzero(const std::string& condition, const TriMap& t) {
  DefectReport report;
  for (std::size_t k = 0; k < t.dim(); ++k) report.record(condition, {k}, t[k]);
  return report;
}

}  // namespace

HomCoalgebra::HomCoalgebra(ComulTensor comul, LinearMap beta, std::optional<Covector> counit)
    : comul_(std::move(comul)), beta_(std::move(beta)), counit_(std::move(counit)) {
  require_comul(comul_, beta_.dim(), "HomCoalgebra: structure constants vs beta");
  if (counit_) require_dims(counit_->dim() == beta_.dim(), "HomCoalgebra: counit covector");
}

bool TriMap::is_zero() const {
  for (const auto& t : values_) {
    if (!t.is_zero()) return false;
  }
  return true;
}

TriMap& TriMap::operator+=(const TriMap& o) {
  require_dims(dim() == o.dim(), "TriMap +");
  for (std::size_t k = 0; k < dim(); ++k) values_[k] += o.values_[k];
  return *this;
}

TriMap& TriMap::operator-=(const TriMap& o) {
  require_dims(dim() == o.dim(), "TriMap -");
  for (std::size_t k = 0; k < dim(); ++k) values_[k] -= o.values_[k];
  return *this;
}

TriMap& TriMap::operator*=(const Scalar& s) {
  for (auto& t : values_) t *= s;
  return *this;
}

TriMap phi_apply(Perm3 sigma, const TriMap& t) {
  TriMap out(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) out[k] = phi_apply(sigma, t[k]);
  return out;
}

TriMap signed_orbit_sum(Subgroup g, const TriMap& t) {
  TriMap out(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) out[k] = signed_orbit_sum(g, t[k]);
  return out;
}

Tensor2 comultiply(const ComulTensor& d, const Vector& x) {
  const std::size_t n = d.extent(0);
  require_dims(x.dim() == n, "comultiply argument");
  Tensor2 out(d.extent(1), d.extent(2));
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < d.extent(1); ++i) {
      for (std::size_t j = 0; j < d.extent(2); ++j) {
        if (!d(k, i, j).is_zero()) out(i, j) += x[k] * d(k, i, j);
      }
    }
  }
  return out;
}

Tensor2 comultiply(const HomCoalgebra& c, const Vector& x) { return comultiply(c.comul(), x); }

HomCoalgebra delta_op(const HomCoalgebra& c) {
  const std::size_t n = c.dim();
  ComulTensor d(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(k, i, j) = c.comul()(k, j, i);
  return HomCoalgebra(std::move(d), c.beta(), c.counit());
}

HomCoalgebra delta_L(const HomCoalgebra& c) {
  const std::size_t n = c.dim();
  ComulTensor d(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(k, i, j) = c.comul()(k, i, j) - c.comul()(k, j, i);
  return HomCoalgebra(std::move(d), c.beta());
}

TriMap expand_left(const ComulTensor& first, const ComulTensor& second, const LinearMap& beta) {
  const std::size_t n = beta.dim();
  require_comul(first, n, "expand_left");
  require_comul(second, n, "expand_left");
  TriMap out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3& t = out[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = first(k, i, j);
        if (c.is_zero()) continue;
        // Delta_2(e_i) (x) beta(e_j)
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            if (second(i, p, q).is_zero()) continue;
            const Scalar cd = c * second(i, p, q);
            for (std::size_t s = 0; s < n; ++s) {
              if (!beta(s, j).is_zero()) t(p, q, s) += cd * beta(s, j);
            }
          }
        }
      }
    }
  }
  return out;
}

TriMap expand_right(const ComulTensor& first, const ComulTensor& second, const LinearMap& beta) {
  const std::size_t n = beta.dim();
  require_comul(first, n, "expand_right");
  require_comul(second, n, "expand_right");
  TriMap out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Tensor3& t = out[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = first(k, i, j);
        if (c.is_zero()) continue;
        // beta(e_i) (x) Delta_2(e_j)
        for (std::size_t p = 0; p < n; ++p) {
          if (beta(p, i).is_zero()) continue;
          const Scalar cb = c * beta(p, i);
          for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t s = 0; s < n; ++s) {
              if (!second(j, q, s).is_zero()) t(p, q, s) += cb * second(j, q, s);
            }
          }
        }
      }
    }
  }
  return out;
}

TriMap beta_coassociator(const HomCoalgebra& c) {
  return expand_left(c.comul(), c.comul(), c.beta()) - expand_right(c.comul(), c.comul(), c.beta());
}

DefectReport check_hom_coassociative(const HomCoalgebra& c) { return check_G_hom_coalgebra(c, Subgroup::G1); }

CounitCheck check_counital(const HomCoalgebra& c) {
  if (!c.counit()) return CounitCheck::no_counit_declared;
  const Covector& eps = *c.counit();
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Vector left(n), right(n);  // (id (x) eps) Delta(e_k), (eps (x) id) Delta(e_k)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        left[i] += c.comul()(k, i, j) * eps[j];
        right[j] += c.comul()(k, i, j) * eps[i];
      }
    }
    const Vector e = Vector::basis(n, k);
    if (left != e || right != e) return CounitCheck::not_counital;
  }
  return CounitCheck::counital;
}

DefectReport check_G_hom_coalgebra(const HomCoalgebra& c, Subgroup g) {
  return report_nonzero(to_string(g) + "-coassociator", signed_orbit_sum(g, beta_coassociator(c)));
}

AdmissibilityReport check_hom_lie_admissible(const HomCoalgebra& c) {
  const TriMap cl = beta_coassociator(delta_L(c));
  AdmissibilityReport r;
  r.cyclic_sum = cl + phi_apply(Perm3::c213(), cl) + phi_apply(Perm3::c231(), cl);
  r.alternating_sum = signed_orbit_sum(Subgroup::G6, beta_coassociator(c));
  r.cyclic = report_nonzero("co-Hom-Jacobi sum of Delta_L", r.cyclic_sum);
  r.alternating = report_nonzero("alternating S3 sum", r.alternating_sum);
  return r;
}

std::array<bool, 5> flip_identities_check(const HomCoalgebra& c) {
  const HomCoalgebra op = delta_op(c);
  const ComulTensor& d = c.comul();
  const ComulTensor& dop = op.comul();
  const LinearMap& b = c.beta();
  const Perm3 t13 = Perm3::t13();
  return {
      beta_coassociator(op) == -phi_apply(t13, beta_coassociator(c)),
      expand_right(d, dop, b) == phi_apply(t13, expand_left(dop, d, b)),
      expand_right(dop, d, b) == phi_apply(t13, expand_left(d, dop, b)),
      expand_left(dop, d, b) == phi_apply(Perm3::c213(), expand_right(d, d, b)),
      expand_left(d, dop, b) == phi_apply(Perm3::t12(), expand_left(d, d, b)),
  };
}

TriMap coassociator_of_cocommutator_via_op(const HomCoalgebra& c) {
  const HomCoalgebra op = delta_op(c);
  const ComulTensor& d = c.comul();
  const ComulTensor& dop = op.comul();
  const LinearMap& b = c.beta();
  const TriMap lop = expand_left(dop, d, b);  // (D (x) beta) D^op
  const TriMap opl = expand_left(d, dop, b);  // (D^op (x) beta) D
  const Perm3 t13 = Perm3::t13();
  return beta_coassociator(c) + beta_coassociator(op) - lop - opl + phi_apply(t13, lop) + phi_apply(t13, opl);
}

TriMap coassociator_of_cocommutator_via_delta(const HomCoalgebra& c) {
  const TriMap cb = beta_coassociator(c);
  const TriMap left = expand_left(c.comul(), c.comul(), c.beta());    // (D (x) beta) D
  const TriMap right = expand_right(c.comul(), c.comul(), c.beta());  // (beta (x) D) D
  return cb - phi_apply(Perm3::t13(), cb) - phi_apply(Perm3::c213(), right) - phi_apply(Perm3::t12(), left) +
         phi_apply(Perm3::t23(), right) + phi_apply(Perm3::c231(), left);
}

std::array<bool, 2> coassociator_expansion_check(const HomCoalgebra& c) {
  const TriMap target = beta_coassociator(delta_L(c));
  return {target == coassociator_of_cocommutator_via_op(c), target == coassociator_of_cocommutator_via_delta(c)};
}

DefectReport check_comodule(const HomCoalgebra& c, const LinearMap& twist, const CoactionTensor& rho) {
  const std::size_t n = c.dim(), m = twist.dim();
  require_dims(rho.extent(0) == m && rho.extent(1) == m && rho.extent(2) == n, "comodule coaction tensor");
  const LinearMap& beta = c.beta();
  DefectReport report;
  for (std::size_t a = 0; a < m; ++a) {
    Tensor3 lhs(m, n, n), rhs(m, n, n);  // components m_x (x) v_y (x) v_z
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar& r = rho(a, b, i);
        if (r.is_zero()) continue;
        // rho(m_b) (x) beta(v_i)
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            if (rho(b, x, y).is_zero()) continue;
            for (std::size_t z = 0; z < n; ++z) {
              if (!beta(z, i).is_zero()) lhs(x, y, z) += r * rho(b, x, y) * beta(z, i);
            }
          }
        // twist(m_b) (x) Delta(v_i)
        for (std::size_t x = 0; x < m; ++x) {
          if (twist(x, b).is_zero()) continue;
          for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
              if (!c.comul()(i, y, z).is_zero()) rhs(x, y, z) += r * twist(x, b) * c.comul()(i, y, z);
            }
        }
      }
    }
    report.record("(rho (x) beta) rho - (g (x) Delta) rho", {a}, lhs - rhs);
  }
  return report;
}

CoactionTensor self_coaction(const HomCoalgebra& c) {
  const std::size_t n = c.dim();
  CoactionTensor r(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(k, i, j) = c.comul()(k, i, j);
  return r;
}

DefectReport check_coalgebra_morphism(const LinearMap& f, const HomCoalgebra& c, const HomCoalgebra& target) {
  require_dims(f.dim() == c.dim() && c.dim() == target.dim(), "coalgebra morphism");
  const std::size_t n = c.dim();
  DefectReport report;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector e = Vector::basis(n, k);
    report.record("(f (x) f) Delta - Delta' f", {k},
                  apply_each(f, f, comultiply(c, e)) - comultiply(target, f.apply(e)));
  }
  if (c.counit() && target.counit()) {
    for (std::size_t k = 0; k < n; ++k) {
      const Vector e = Vector::basis(n, k);
      report.record("eps - eps' f", {k}, dot(*c.counit(), e) - dot(*target.counit(), f.apply(e)));
    }
  } else if (c.counit().has_value() != target.counit().has_value()) {
    report.add(Witness{"counit declared on only one side", {}, {}});
  }
  const LinearMap twist = f * c.beta() - target.beta() * f;
  for (std::size_t j = 0; j < n; ++j) report.record("f o beta - beta' o f", {j}, twist.image(j));
  return report;
}

}  // namespace homalg
