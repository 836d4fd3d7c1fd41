#include "homalg/algebra.hpp"

#include <stdexcept>

namespace homalg {

namespace {

void require_cubic(const MulTensor& c, std::size_t dim, const char* what) {
  require_dims(c.extent(0) == dim && c.extent(1) == dim && c.extent(2) == dim, what);
}

// Value table of a bilinear map on basis pairs.
std::vector<Vector> basis_products(const MulTensor& c) {
  const std::size_t n = c.extent(0);
  std::vector<Vector> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = c(i, j, k);
      out.push_back(std::move(v));
    }
  }
  return out;
}

// a_{alpha,mu}(e_i, e_j, e_k), flattened at (i * n + j) * n + k.
std::vector<Vector> basis_associators(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> out;
  out.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out.push_back(alpha_associator(a, Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k)));
      }
    }
  }
  return out;
}

}  // namespace

HomAlgebra::HomAlgebra(MulTensor mul, LinearMap alpha, std::optional<Vector> unit)
    : mul_(std::move(mul)), alpha_(std::move(alpha)), unit_(std::move(unit)) {
  require_cubic(mul_, alpha_.dim(), "HomAlgebra: structure constants vs alpha");
  if (unit_) require_dims(unit_->dim() == alpha_.dim(), "HomAlgebra: unit vector");
}

HomBracket::HomBracket(MulTensor bracket, LinearMap alpha)
    : bracket_(std::move(bracket)), alpha_(std::move(alpha)) {
  require_cubic(bracket_, alpha_.dim(), "HomBracket: structure constants vs alpha");
}

Vector bilinear(const MulTensor& c, const Vector& x, const Vector& y) {
  const std::size_t n = c.extent(0);
  require_dims(x.dim() == n && y.dim() == n && c.extent(1) == n, "bilinear map arguments");
  Vector out(c.extent(2));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < c.extent(2); ++k) {
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
      }
    }
  }
  return out;
}

Vector multiply(const HomAlgebra& a, const Vector& x, const Vector& y) { return bilinear(a.mul(), x, y); }

Vector bracket(const HomBracket& l, const Vector& x, const Vector& y) { return bilinear(l.bracket(), x, y); }

Vector alpha_associator(const HomAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  const LinearMap& al = a.alpha();
  return multiply(a, multiply(a, x, y), al.apply(z)) - multiply(a, al.apply(x), multiply(a, y, z));
}

DefectReport check_hom_associative(const HomAlgebra& a) { return check_G_hom_associative(a, Subgroup::G1); }

UnitCheck check_unital(const HomAlgebra& a) {
  if (!a.unit()) return UnitCheck::no_unit_declared;
  const Vector& u = *a.unit();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vector e = Vector::basis(a.dim(), j);
    if (multiply(a, u, e) != e || multiply(a, e, u) != e) return UnitCheck::not_unital;
  }
  return UnitCheck::unital;
}

DefectReport check_G_hom_associative(const HomAlgebra& a, Subgroup g) {
  const std::size_t n = a.dim();
  const auto assoc = basis_associators(a);
  const auto perms = elements(g);
  DefectReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx[3] = {i, j, k};
        Vector sum(n);
        for (const Perm3 sigma : perms) {
          std::size_t o[3];
          for (std::size_t m = 0; m < 3; ++m) o[sigma(m)] = idx[m];
          const Vector& term = assoc[(o[0] * n + o[1]) * n + o[2]];
          if (sigma.sign() > 0) {
            sum += term;
          } else {
            sum -= term;
          }
        }
        report.record(to_string(g) + "-associator", {i, j, k}, sum);
      }
    }
  }
  return report;
}

DefectReport check_twist_multiplicative(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  DefectReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i);
      const Vector y = Vector::basis(n, j);
      report.record("alpha(xy) - alpha(x)alpha(y)", {i, j},
                    a.alpha().apply(multiply(a, x, y)) - multiply(a, a.alpha().apply(x), a.alpha().apply(y)));
    }
  }
  return report;
}

HomBracket commutator_bracket(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  MulTensor b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) b(i, j, k) = a.mul()(i, j, k) - a.mul()(j, i, k);
    }
  }
  return HomBracket(std::move(b), a.alpha());
}

DefectReport check_skew(const HomBracket& l) {
  const std::size_t n = l.dim();
  const auto table = basis_products(l.bracket());
  DefectReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      report.record("[x,y] + [y,x]", {i, j}, table[i * n + j] + table[j * n + i]);
    }
  }
  return report;
}

DefectReport check_hom_jacobi(const HomBracket& l) {
  const std::size_t n = l.dim();
  DefectReport report;
  const auto br = [&](const Vector& x, const Vector& y) { return bracket(l, x, y); };
  const auto& al = l.alpha();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = Vector::basis(n, i), y = Vector::basis(n, j), z = Vector::basis(n, k);
        const Vector sum = br(al.apply(x), br(y, z)) + br(al.apply(y), br(z, x)) + br(al.apply(z), br(x, y));
        report.record("Hom-Jacobi cyclic sum", {i, j, k}, sum);
      }
    }
  }
  return report;
}

DefectReport check_hom_leibniz(const HomBracket& l) {
  const std::size_t n = l.dim();
  DefectReport report;
  const auto br = [&](const Vector& x, const Vector& y) { return bracket(l, x, y); };
  const auto& al = l.alpha();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = Vector::basis(n, i), y = Vector::basis(n, j), z = Vector::basis(n, k);
        const Vector defect = br(br(x, y), al.apply(z)) - br(br(x, z), al.apply(y)) - br(al.apply(x), br(y, z));
        report.record("Hom-Leibniz", {i, j, k}, defect);
      }
    }
  }
  return report;
}

LinearMap kronecker(const LinearMap& f, const LinearMap& g) {
  const std::size_t n = f.dim(), m = g.dim();
  LinearMap h(n * m);
  for (std::size_t r1 = 0; r1 < n; ++r1) {
    for (std::size_t c1 = 0; c1 < n; ++c1) {
      if (f(r1, c1).is_zero()) continue;
      for (std::size_t r2 = 0; r2 < m; ++r2) {
        for (std::size_t c2 = 0; c2 < m; ++c2) h(r1 * m + r2, c1 * m + c2) = f(r1, c1) * g(r2, c2);
      }
    }
  }
  return h;
}

HomAlgebra tensor_product(const HomAlgebra& a1, const HomAlgebra& a2) {
  if (a1.unit().has_value() != a2.unit().has_value()) {
    throw std::invalid_argument("tensor_product: both factors must be unital or both non-unital");
  }
  const std::size_t n1 = a1.dim(), n2 = a2.dim(), n = n1 * n2;
  MulTensor c(n);
  for (std::size_t i1 = 0; i1 < n1; ++i1)
    for (std::size_t i2 = 0; i2 < n2; ++i2)
      for (std::size_t j1 = 0; j1 < n1; ++j1)
        for (std::size_t j2 = 0; j2 < n2; ++j2)
          for (std::size_t k1 = 0; k1 < n1; ++k1) {
            const Scalar& c1 = a1.mul()(i1, j1, k1);
            if (c1.is_zero()) continue;
            for (std::size_t k2 = 0; k2 < n2; ++k2) {
              c(i1 * n2 + i2, j1 * n2 + j2, k1 * n2 + k2) = c1 * a2.mul()(i2, j2, k2);
            }
          }
  std::optional<Vector> unit;
  if (a1.unit()) {
    Vector u(n);
    for (std::size_t i1 = 0; i1 < n1; ++i1)
      for (std::size_t i2 = 0; i2 < n2; ++i2) u[i1 * n2 + i2] = (*a1.unit())[i1] * (*a2.unit())[i2];
    unit = std::move(u);
  }
  return HomAlgebra(std::move(c), kronecker(a1.alpha(), a2.alpha()), std::move(unit));
}

DefectReport check_algebra_morphism(const LinearMap& f, const HomAlgebra& a, const HomAlgebra& target) {
  require_dims(f.dim() == a.dim() && a.dim() == target.dim(), "algebra morphism");
  const std::size_t n = a.dim();
  DefectReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      report.record("mu'(f x, f y) - f(mu(x, y))", {i, j},
                    multiply(target, f.apply(x), f.apply(y)) - f.apply(multiply(a, x, y)));
    }
  }
  if (a.unit() && target.unit()) {
    report.record("f(eta) - eta'", {}, f.apply(*a.unit()) - *target.unit());
  } else if (a.unit().has_value() != target.unit().has_value()) {
    report.add(Witness{"unit declared on only one side", {}, {}});
  }
  const LinearMap twist = f * a.alpha() - target.alpha() * f;
  for (std::size_t j = 0; j < n; ++j) report.record("f o alpha - alpha' o f", {j}, twist.image(j));
  return report;
}

DefectReport check_module(const HomAlgebra& a, const LinearMap& twist, const ActionTensor& action) {
  const std::size_t n = a.dim(), m = twist.dim();
  require_dims(action.extent(0) == n && action.extent(1) == m && action.extent(2) == m, "module action tensor");
  const auto act = [&](const Vector& v, const Vector& x) {
    Vector out(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t p = 0; p < m; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < m; ++q) {
          if (!action(i, p, q).is_zero()) out[q] += v[i] * x[p] * action(i, p, q);
        }
      }
    }
    return out;
  };
  DefectReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t p = 0; p < m; ++p) {
        const Vector vi = Vector::basis(n, i), vj = Vector::basis(n, j), mp = Vector::basis(m, p);
        const Vector lhs = act(multiply(a, vi, vj), twist.apply(mp));
        const Vector rhs = act(a.alpha().apply(vi), act(vj, mp));
        report.record("gamma(mu (x) f) - gamma(alpha (x) gamma)", {i, j, p}, lhs - rhs);
      }
    }
  }
  return report;
}

ActionTensor self_action(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  ActionTensor g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g(i, j, k) = a.mul()(i, j, k);
  return g;
}

}  // namespace homalg
