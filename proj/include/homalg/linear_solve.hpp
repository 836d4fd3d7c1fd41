#pragma once

#include <optional>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

// Affine solution set {particular + span(kernel)} of A x = b.
struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel;

  bool unique() const { return kernel.empty(); }
};

// Exact Gauss-Jordan elimination over Q. std::nullopt means the system is
// inconsistent.
std::optional<LinearSolution> linear_solve(const Matrix& a, const Vector& b);

// Basis of {x : A x = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& a);

std::size_t rank(const Matrix& a);

// Accumulates linear equations over a fixed number of unknowns.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }

  // sum_i coeffs[i] x_i = rhs; all-zero rows with zero rhs are dropped.
  void add(std::vector<Scalar> coeffs, Scalar rhs);
  void permute_rows(const std::vector<std::size_t>& order);

  Matrix matrix() const;
  Vector rhs() const;
  std::optional<LinearSolution> solve() const { return linear_solve(matrix(), rhs()); }

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<Scalar> rhs_;
};

}  // namespace homalg
