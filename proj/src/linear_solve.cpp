#include "homalg/linear_solve.hpp"

#include <stdexcept>

namespace homalg {

namespace {

struct Echelon {
  Matrix m;  // augmented, reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

Echelon reduce(Matrix m, std::size_t coefficient_cols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < coefficient_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

std::vector<Vector> kernel_from(const Echelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector k(n);
    k[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) k[e.pivot_cols[r]] = -e.m(r, free);
    basis.push_back(std::move(k));
  }
  return basis;
}

}  // namespace

std::optional<LinearSolution> linear_solve(const Matrix& a, const Vector& b) {
  require_dims(a.rows() == b.dim(), "linear_solve: rows of A vs length of b");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const Echelon e = reduce(std::move(aug), n);
  for (std::size_t r = e.pivot_cols.size(); r < e.m.rows(); ++r) {
    if (!e.m(r, n).is_zero()) return std::nullopt;
  }
  LinearSolution sol;
  sol.particular = Vector(n);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) sol.particular[e.pivot_cols[r]] = e.m(r, n);
  sol.kernel = kernel_from(e, n);
  return sol;
}

std::vector<Vector> nullspace(const Matrix& a) {
  return kernel_from(reduce(a, a.cols()), a.cols());
}

std::size_t rank(const Matrix& a) { return reduce(a, a.cols()).pivot_cols.size(); }

void LinearSystem::add(std::vector<Scalar> coeffs, Scalar rhs) {
  require_dims(coeffs.size() == unknowns_, "equation length");
  bool zero = rhs.is_zero();
  for (const auto& c : coeffs) zero = zero && c.is_zero();
  if (zero) return;
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(std::move(rhs));
}

void LinearSystem::permute_rows(const std::vector<std::size_t>& order) {
  if (order.size() != rows_.size()) throw std::invalid_argument("row permutation size");
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (auto i : order) {
    rows.push_back(rows_.at(i));
    rhs.push_back(rhs_.at(i));
  }
  rows_ = std::move(rows);
  rhs_ = std::move(rhs);
}

Matrix LinearSystem::matrix() const {
  Matrix m(rows_.size(), unknowns_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < unknowns_; ++c) m(r, c) = rows_[r][c];
  }
  return m;
}

Vector LinearSystem::rhs() const { return Vector(rhs_); }

}  // namespace homalg
