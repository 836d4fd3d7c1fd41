#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

// Thrown when operands with incompatible dimensions are combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_dims(bool ok, const std::string& what);

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Vector zero(std::size_t dim) { return Vector(dim); }
  static Vector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> coords_;
};

// Linear functional V -> K, stored by its values on the basis.
using Covector = Vector;

Scalar dot(const Covector& f, const Vector& v);

// Rectangular rows x cols matrix; used for linear systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector apply(const Vector& x) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// Square matrix of an endomorphism; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  // Row-major entries: rows[r][c] is the e_r coefficient of the image of e_c.
  static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);
  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t dim) { return LinearMap(dim); }
  static LinearMap scalar(std::size_t dim, const Scalar& s);
  // The map whose column j is images[j].
  static LinearMap from_images(const std::vector<Vector>& images);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  Vector apply(const Vector& x) const;
  Vector image(std::size_t j) const;  // column j
  LinearMap transpose() const;
  bool is_zero() const;

  // (f * g) = f o g
  friend LinearMap operator*(const LinearMap& f, const LinearMap& g);
  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator-=(const LinearMap& o);
  LinearMap& operator*=(const Scalar& s);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Scalar& s, LinearMap f) { return f *= s; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

// Dense coefficient array over A (x) B, indexed (i, j) for a_i (x) b_j.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(std::size_t n0, std::size_t n1) : n0_(n0), n1_(n1), c_(n0 * n1) {}
  explicit Tensor2(std::size_t dim) : Tensor2(dim, dim) {}
  static Tensor2 pure(const Vector& a, const Vector& b);

  std::size_t extent0() const { return n0_; }
  std::size_t extent1() const { return n1_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return c_[i * n1_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return c_[i * n1_ + j]; }
  bool is_zero() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& s, Tensor2 t) { return t *= s; }
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::size_t n0_ = 0, n1_ = 0;
  std::vector<Scalar> c_;
};

// (f (x) g)(t)
Tensor2 apply_each(const LinearMap& f, const LinearMap& g, const Tensor2& t);
Tensor2 flip_tau(const Tensor2& t);

// Dense three-index array. The tag separates tensors that share a layout but
// not a meaning (structure constants, values in V(x)V(x)V, module actions).
template <class Tag>
class Array3 {
 public:
  Array3() = default;
  Array3(std::size_t n0, std::size_t n1, std::size_t n2) : n_{n0, n1, n2}, c_(n0 * n1 * n2) {}
  explicit Array3(std::size_t dim) : Array3(dim, dim, dim) {}

  std::size_t extent(std::size_t axis) const { return n_[axis]; }
  bool is_cubic() const { return n_[0] == n_[1] && n_[1] == n_[2]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_[1] + j) * n_[2] + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_[1] + j) * n_[2] + k]; }
  std::span<const Scalar> data() const { return c_; }

  bool is_zero() const {
    for (const auto& s : c_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  Array3& operator+=(const Array3& o) {
    require_dims(n_[0] == o.n_[0] && n_[1] == o.n_[1] && n_[2] == o.n_[2], "Array3 +=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Array3& operator-=(const Array3& o) {
    require_dims(n_[0] == o.n_[0] && n_[1] == o.n_[1] && n_[2] == o.n_[2], "Array3 -=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Array3& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Array3 operator+(Array3 a, const Array3& b) { return a += b; }
  friend Array3 operator-(Array3 a, const Array3& b) { return a -= b; }
  friend Array3 operator-(Array3 a) { return a *= Scalar(-1); }
  friend Array3 operator*(const Scalar& s, Array3 a) { return a *= s; }
  friend bool operator==(const Array3&, const Array3&) = default;

 private:
  std::size_t n_[3] = {0, 0, 0};
  std::vector<Scalar> c_;
};

struct ValueTag {};
struct MulTag {};
struct ComulTag {};
struct ActionTag {};
struct CoactionTag {};

// Element of V (x) V (x) V, coefficient (i, j, k) of e_i (x) e_j (x) e_k.
using Tensor3 = Array3<ValueTag>;
// mu(e_i (x) e_j) = sum_k C(i, j, k) e_k
using MulTensor = Array3<MulTag>;
// Delta(e_k) = sum_{ij} D(k, i, j) e_i (x) e_j
using ComulTensor = Array3<ComulTag>;
// gamma(v_i (x) m_a) = sum_b G(i, a, b) m_b
using ActionTensor = Array3<ActionTag>;
// rho(m_a) = sum_{b,i} R(a, b, i) m_b (x) v_i
using CoactionTensor = Array3<CoactionTag>;

std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const LinearMap& f);

}  // namespace homalg
