#include "homalg/bialgebra.hpp"

#include <stdexcept>

#include "homalg/duality.hpp"
#include "homalg/random.hpp"

namespace homalg {

namespace {

// Commutators of basis pairs must satisfy `member`.
template <class Pred>
bool bracket_closed(const HomBialgebra& b, const std::vector<Vector>& basis, Pred member) {
  for (std::size_t p = 0; p < basis.size(); ++p) {
    for (std::size_t q = p + 1; q < basis.size(); ++q) {
      const Vector br = multiply(b.algebra(), basis[p], basis[q]) - multiply(b.algebra(), basis[q], basis[p]);
      if (!member(br)) return false;
    }
  }
  return true;
}

LinearMap matrix_unit(std::size_t dim, std::size_t r, std::size_t c) {
  LinearMap e(dim);
  e(r, c) = 1;
  return e;
}

bool convolution_identity(const HomBialgebra& b, const LinearMap& f, const LinearMap& g, const LinearMap& h) {
  return convolution(b, convolution_twist(b, f), convolution(b, g, h)) ==
         convolution(b, convolution(b, f, g), convolution_twist(b, h));
}

}  // namespace

HomBialgebra::HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
  require_dims(algebra_.dim() == coalgebra_.dim(), "HomBialgebra: algebra vs coalgebra dimension");
  if (!algebra_.unit()) throw std::invalid_argument("HomBialgebra: algebra has no unit");
  if (!coalgebra_.counit()) throw std::invalid_argument("HomBialgebra: coalgebra has no counit");
}

Tensor2 bullet(const HomAlgebra& a, const Tensor2& s, const Tensor2& t) {
  const std::size_t n = a.dim();
  require_dims(s.extent0() == n && s.extent1() == n && t.extent0() == n && t.extent1() == n, "bullet product");
  Tensor2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (t(k, l).is_zero()) continue;
          const Scalar coef = s(i, j) * t(k, l);
          // mu(e_i (x) e_k) (x) mu(e_j (x) e_l)
          for (std::size_t p = 0; p < n; ++p) {
            if (a.mul()(i, k, p).is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
              if (!a.mul()(j, l, q).is_zero()) out(p, q) += coef * a.mul()(i, k, p) * a.mul()(j, l, q);
            }
          }
        }
    }
  return out;
}

DefectReport check_bialgebra_weak(const HomBialgebra& b) {
  const std::size_t n = b.dim();
  const HomAlgebra& a = b.algebra();
  const HomCoalgebra& c = b.coalgebra();
  DefectReport report;
  report.record("Delta(1) - 1 (x) 1", {}, comultiply(c, b.unit()) - Tensor2::pure(b.unit(), b.unit()));
  report.record("eps(1) - 1", {}, dot(b.counit(), b.unit()) - Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const Vector xy = multiply(a, x, y);
      report.record("Delta(xy) - Delta(x).Delta(y)", {i, j},
                    comultiply(c, xy) - bullet(a, comultiply(c, x), comultiply(c, y)));
      report.record("eps(xy) - eps(x)eps(y)", {i, j},
                    dot(b.counit(), xy) - dot(b.counit(), x) * dot(b.counit(), y));
    }
  }
  return report;
}

DefectReport check_bialgebra_strict(const HomBialgebra& b) {
  DefectReport report = check_bialgebra_weak(b);
  const std::size_t n = b.dim();
  const LinearMap& alpha = b.algebra().alpha();
  for (std::size_t k = 0; k < n; ++k) {
    const Vector e = Vector::basis(n, k);
    report.record("Delta(alpha x) - (alpha (x) alpha) Delta(x)", {k},
                  comultiply(b.coalgebra(), alpha.apply(e)) - apply_each(alpha, alpha, comultiply(b.coalgebra(), e)));
    report.record("eps(alpha x) - eps(x)", {k}, dot(b.counit(), alpha.apply(e)) - dot(b.counit(), e));
  }
  return report;
}

LinearMap convolution(const HomBialgebra& b, const LinearMap& f, const LinearMap& g) {
  const std::size_t n = b.dim();
  require_dims(f.dim() == n && g.dim() == n, "convolution operands");
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& d = b.coalgebra().comul()(k, i, j);
        if (!d.is_zero()) v += d * multiply(b.algebra(), f.image(i), g.image(j));
      }
    images.push_back(std::move(v));
  }
  return LinearMap::from_images(images);
}

LinearMap convolution_twist(const HomBialgebra& b, const LinearMap& f) {
  return b.algebra().alpha() * f * b.coalgebra().beta();
}

LinearMap convolution_unit(const HomBialgebra& b) {
  const std::size_t n = b.dim();
  LinearMap u(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = b.unit()[r] * b.counit()[c];
  return u;
}

ConvolutionCheck check_convolution_hom_associative(const HomBialgebra& b, std::size_t samples, std::uint64_t seed) {
  if (!check_hom_associative(b.algebra()).holds() || !check_hom_coassociative(b.coalgebra()).holds()) {
    return ConvolutionCheck::premises_not_met;
  }
  const std::size_t n = b.dim();
  if (n <= 3) {
    std::vector<LinearMap> units;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) units.push_back(matrix_unit(n, r, c));
    for (const auto& f : units)
      for (const auto& g : units)
        for (const auto& h : units) {
          if (!convolution_identity(b, f, g, h)) return ConvolutionCheck::fails;
        }
  }
  RationalSampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const LinearMap f = rng.map(n), g = rng.map(n), h = rng.map(n);
    if (!convolution_identity(b, f, g, h)) return ConvolutionCheck::fails;
  }
  return ConvolutionCheck::holds;
}

bool is_antipode(const HomBialgebra& b, const LinearMap& s) {
  const LinearMap id = LinearMap::identity(b.dim());
  const LinearMap unit = convolution_unit(b);
  return convolution(b, s, id) == unit && convolution(b, id, s) == unit;
}

HomHopf::HomHopf(HomBialgebra bialgebra, LinearMap antipode)
    : bialgebra_(std::move(bialgebra)), antipode_(std::move(antipode)) {
  require_dims(antipode_.dim() == bialgebra_.dim(), "HomHopf: antipode dimension");
  if (!is_antipode(bialgebra_, antipode_)) {
    throw std::invalid_argument("HomHopf: map is not a convolution inverse of the identity");
  }
}

LinearSystem antipode_system(const HomBialgebra& b) {
  const std::size_t n = b.dim();
  const MulTensor& mu = b.algebra().mul();
  const ComulTensor& d = b.coalgebra().comul();
  LinearSystem sys(n * n);
  // (S * id)(e_k), component p
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<Scalar> row(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) row[r * n + i] += d(k, i, j) * mu(r, j, p);
      sys.add(std::move(row), b.counit()[k] * b.unit()[p]);
    }
  // (id * S)(e_k), component p
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<Scalar> row(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) row[r * n + j] += d(k, i, j) * mu(i, r, p);
      sys.add(std::move(row), b.counit()[k] * b.unit()[p]);
    }
  return sys;
}

LinearMap map_from_unknowns(const Vector& x, std::size_t dim) {
  require_dims(x.dim() == dim * dim, "antipode unknowns");
  LinearMap s(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) s(r, c) = x[r * dim + c];
  return s;
}

AntipodeResult solve_antipode(const HomBialgebra& b) { return solve_antipode(b, antipode_system(b)); }

AntipodeResult solve_antipode(const HomBialgebra& b, const LinearSystem& system) {
  const auto sol = system.solve();
  if (!sol) return NoAntipode{};
  const std::size_t n = b.dim();
  LinearMap s = map_from_unknowns(sol->particular, n);
  if (!sol->unique()) {
    AntipodeFamily family{std::move(s), {}};
    for (const auto& k : sol->kernel) family.kernel.push_back(map_from_unknowns(k, n));
    return family;
  }
  const bool fixes_unit = s.apply(b.unit()) == b.unit();
  bool preserves_counit = true;
  for (std::size_t k = 0; k < n; ++k) {
    preserves_counit = preserves_counit && dot(b.counit(), s.image(k)) == b.counit()[k];
  }
  return UniqueAntipode{HomHopf(b, std::move(s)), fixes_unit, preserves_counit};
}

HomBialgebra dual_bialgebra(const HomBialgebra& b) {
  return HomBialgebra(dual_algebra_of_coalgebra(b.coalgebra()), dual_coalgebra_of_algebra(b.algebra()));
}

HomHopf dual_hopf(const HomHopf& h) {
  HomBialgebra dual = dual_bialgebra(h.bialgebra());
  LinearMap s = h.antipode().transpose();
  if (!is_antipode(dual, s)) throw std::logic_error("dual_hopf: transposed antipode fails on the dual");
  return HomHopf(std::move(dual), std::move(s));
}

bool is_primitive(const HomBialgebra& b, const Vector& x) {
  return comultiply(b.coalgebra(), x) == Tensor2::pure(b.unit(), x) + Tensor2::pure(x, b.unit());
}

bool is_generalized_primitive(const HomBialgebra& b, const Vector& x) {
  const Tensor2 dx = comultiply(b.coalgebra(), x);
  if (dx != flip_tau(dx)) return false;
  const HomCoalgebra& c = b.coalgebra();
  const TriMap left = expand_left(c.comul(), c.comul(), c.beta());
  const TriMap right = expand_right(c.comul(), c.comul(), c.beta());
  Tensor3 l(b.dim()), r(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    if (x[k].is_zero()) continue;
    l += x[k] * left[k];
    r += x[k] * right[k];
  }
  return r == phi_apply(Perm3::t13(), l);
}

PrimitiveSubspace primitive_subspace(const HomBialgebra& b) {
  const std::size_t n = b.dim();
  const Vector& u = b.unit();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = b.coalgebra().comul()(k, i, j);
        if (j == k) v -= u[i];
        if (i == k) v -= u[j];
        m(i * n + j, k) = v;
      }
  PrimitiveSubspace out;
  out.basis = nullspace(m);
  for (const auto& x : out.basis) out.counit_vanishes = out.counit_vanishes && dot(b.counit(), x).is_zero();
  out.bracket_closed = bracket_closed(b, out.basis, [&](const Vector& v) { return is_primitive(b, v); });
  return out;
}

GeneralizedPrimitiveSubspace generalized_primitive_subspace(const HomBialgebra& b) {
  const std::size_t n = b.dim();
  const HomCoalgebra& c = b.coalgebra();
  const TriMap left = expand_left(c.comul(), c.comul(), c.beta());
  const TriMap right = expand_right(c.comul(), c.comul(), c.beta());
  Matrix m(n * n * n + n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor3 swapped = phi_apply(Perm3::t13(), left[k]);
    std::size_t row = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < n; ++s) m(row++, k) = right[k](p, q, s) - swapped(p, q, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(row++, k) = c.comul()(k, i, j) - c.comul()(k, j, i);
  }
  GeneralizedPrimitiveSubspace out;
  out.basis = nullspace(m);
  out.contains_primitives = span_contains(out.basis, primitive_subspace(b).basis, n);
  out.bracket_closed = bracket_closed(b, out.basis, [&](const Vector& v) { return is_generalized_primitive(b, v); });
  return out;
}

bool span_contains(const std::vector<Vector>& super, const std::vector<Vector>& sub, std::size_t dim) {
  const auto as_matrix = [dim](const std::vector<Vector>& vs) {
    Matrix m(vs.size(), dim);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = vs[r][c];
    return m;
  };
  std::vector<Vector> both = super;
  both.insert(both.end(), sub.begin(), sub.end());
  return rank(as_matrix(both)) == rank(as_matrix(super));
}

bool counit_expansion_check(const HomBialgebra& b, const std::vector<LinearMap>& maps) {
  const std::size_t n = b.dim();
  const Covector& eps = b.counit();
  std::vector<LinearMap> all = maps;
  all.push_back(LinearMap::identity(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor2 dx = comultiply(b.coalgebra(), Vector::basis(n, k));
    for (const auto& f : all) {
      Vector left(n), right(n);  // sum f(x1) eps(x2), sum eps(x1) f(x2)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (dx(i, j).is_zero()) continue;
          left += (dx(i, j) * eps[j]) * f.image(i);
          right += (dx(i, j) * eps[i]) * f.image(j);
        }
      const Vector fx = f.image(k);
      if (left != fx || right != fx) return false;
    }
  }
  return true;
}

}  // namespace homalg
