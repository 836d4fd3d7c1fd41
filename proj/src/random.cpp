#include "homalg/random.hpp"

namespace homalg {

Scalar RationalSampler::nonzero_scalar() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

Vector RationalSampler::vector(std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = scalar();
  return v;
}

LinearMap RationalSampler::map(std::size_t dim) {
  LinearMap f(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) f(r, c) = scalar();
  return f;
}

MulTensor RationalSampler::mul(std::size_t dim) {
  MulTensor t(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) t(i, j, k) = scalar();
  return t;
}

ComulTensor RationalSampler::comul(std::size_t dim) {
  ComulTensor t(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) t(k, i, j) = scalar();
  return t;
}

}  // namespace homalg
