#include "homalg/tensor.hpp"

namespace homalg {

void require_dims(bool ok, const std::string& what) {
  if (!ok) throw DimensionError("dimension mismatch: " + what);
}

Vector Vector::basis(std::size_t dim, std::size_t i) {
  require_dims(i < dim, "basis index out of range");
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& s : coords_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require_dims(dim() == o.dim(), "vector +");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_dims(dim() == o.dim(), "vector -");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Scalar dot(const Covector& f, const Vector& v) {
  require_dims(f.dim() == v.dim(), "covector pairing");
  Scalar r;
  for (std::size_t i = 0; i < v.dim(); ++i) r += f[i] * v[i];
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_dims(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  require_dims(x.dim() == cols_, "matrix times vector");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  LinearMap f(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_dims(rows[r].size() == rows.size(), "linear map must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) f(r, c) = rows[r][c];
  }
  return f;
}

LinearMap LinearMap::identity(std::size_t dim) { return scalar(dim, Scalar(1)); }

LinearMap LinearMap::scalar(std::size_t dim, const Scalar& s) {
  LinearMap f(dim);
  for (std::size_t i = 0; i < dim; ++i) f(i, i) = s;
  return f;
}

LinearMap LinearMap::from_images(const std::vector<Vector>& images) {
  LinearMap f(images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    require_dims(images[c].dim() == images.size(), "image dimension");
    for (std::size_t r = 0; r < images.size(); ++r) f(r, c) = images[c][r];
  }
  return f;
}

Vector LinearMap::apply(const Vector& x) const {
  require_dims(x.dim() == dim_, "map applied to vector");
  Vector y(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

Vector LinearMap::image(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, j);
  return v;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool LinearMap::is_zero() const {
  for (const auto& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

LinearMap operator*(const LinearMap& f, const LinearMap& g) {
  require_dims(f.dim() == g.dim(), "map composition");
  const std::size_t n = f.dim();
  LinearMap h(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t m = 0; m < n; ++m) {
      if (f(r, m).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!g(m, c).is_zero()) h(r, c) += f(r, m) * g(m, c);
      }
    }
  }
  return h;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  require_dims(dim_ == o.dim_, "map +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
  require_dims(dim_ == o.dim_, "map -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Tensor2 Tensor2::pure(const Vector& a, const Vector& b) {
  Tensor2 t(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) t(i, j) = a[i] * b[j];
  }
  return t;
}

bool Tensor2::is_zero() const {
  for (const auto& s : c_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require_dims(n0_ == o.n0_ && n1_ == o.n1_, "tensor2 +");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  require_dims(n0_ == o.n0_ && n1_ == o.n1_, "tensor2 -");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Tensor2 apply_each(const LinearMap& f, const LinearMap& g, const Tensor2& t) {
  require_dims(f.dim() == t.extent0() && g.dim() == t.extent1(), "(f (x) g) applied to tensor");
  Tensor2 out(f.dim(), g.dim());
  for (std::size_t i = 0; i < t.extent0(); ++i) {
    for (std::size_t j = 0; j < t.extent1(); ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < f.dim(); ++p) {
        if (f(p, i).is_zero()) continue;
        for (std::size_t q = 0; q < g.dim(); ++q) {
          if (!g(q, j).is_zero()) out(p, q) += t(i, j) * f(p, i) * g(q, j);
        }
      }
    }
  }
  return out;
}

Tensor2 flip_tau(const Tensor2& t) {
  Tensor2 out(t.extent1(), t.extent0());
  for (std::size_t i = 0; i < t.extent0(); ++i) {
    for (std::size_t j = 0; j < t.extent1(); ++j) out(j, i) = t(i, j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const LinearMap& f) {
  os << '[';
  for (std::size_t r = 0; r < f.dim(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < f.dim(); ++c) os << (c ? " " : "") << f(r, c);
  }
  return os << ']';
}

}  // namespace homalg
