#pragma once

#include <cstdint>
#include <random>

#include "homalg/tensor.hpp"

namespace homalg {

// Seeded source of small exact rationals: numerator uniform in
// [-max_numerator, max_numerator], denominator uniform in [1, max_denominator].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long max_numerator = 3, long max_denominator = 3)
      : engine_(seed), num_(-max_numerator, max_numerator), den_(1, max_denominator) {}

  Scalar scalar() { return Scalar(num_(engine_), den_(engine_)); }
  Scalar nonzero_scalar();
  Vector vector(std::size_t dim);
  LinearMap map(std::size_t dim);
  MulTensor mul(std::size_t dim);
  ComulTensor comul(std::size_t dim);
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

}  // namespace homalg
