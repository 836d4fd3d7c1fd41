#pragma once

// Independent reference computations used by the unit tests. They work on raw
// index loops and never call the library routine they are compared against.

#include <array>
#include <cstdint>
#include <vector>

#include "homalg/random.hpp"
#include "homalg/tensor.hpp"

namespace oracle {

using homalg::ComulTensor;
using homalg::LinearMap;
using homalg::MulTensor;
using homalg::Scalar;
using homalg::Tensor3;
using homalg::Vector;

// One-based images written straight from cycle notation: entry m-1 is sigma(m).
inline const std::array<std::array<int, 3>, 6>& perm_images() {
  static const std::array<std::array<int, 3>, 6> t{{
      {1, 2, 3},  // id
      {2, 1, 3},  // (12)
      {3, 2, 1},  // (13)
      {1, 3, 2},  // (23)
      {3, 1, 2},  // (213): 1->3, 2->1, 3->2
      {2, 3, 1},  // (231): 1->2, 2->3, 3->1
  }};
  return t;
}

inline int perm_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Phi_sigma(x1 (x) x2 (x) x3) = x_{sigma^-1(1)} (x) x_{sigma^-1(2)} (x) x_{sigma^-1(3)}
inline Tensor3 phi(const std::array<int, 3>& sigma, const Tensor3& t) {
  std::array<int, 3> inv{};
  for (int m = 0; m < 3; ++m) inv[sigma[m] - 1] = m + 1;
  const std::size_t n = t.extent(0);
  Tensor3 out(n);
  std::array<std::size_t, 3> in{};
  for (in[0] = 0; in[0] < n; ++in[0])
    for (in[1] = 0; in[1] < n; ++in[1])
      for (in[2] = 0; in[2] < n; ++in[2]) {
        // output position p carries input factor sigma^-1(p)
        const std::size_t o0 = in[inv[0] - 1], o1 = in[inv[1] - 1], o2 = in[inv[2] - 1];
        out(o0, o1, o2) += t(in[0], in[1], in[2]);
      }
  return out;
}

// mu(mu(e_i, e_j), alpha e_k) - mu(alpha e_i, mu(e_j, e_k)), component r, for every (i, j, k)
inline std::vector<Tensor3> associator(const MulTensor& c, const LinearMap& a) {
  const std::size_t n = a.dim();
  std::vector<Tensor3> out(n, Tensor3(n));  // out[r](i, j, k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          Scalar v;
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              v += c(i, j, p) * a(q, k) * c(p, q, r);
              v -= a(p, i) * c(j, k, q) * c(p, q, r);
            }
          out[r](i, j, k) = v;
        }
  return out;
}

// (Delta (x) beta) Delta (e_k) - (beta (x) Delta) Delta (e_k) for every k
inline std::vector<Tensor3> coassociator(const ComulTensor& d, const LinearMap& b) {
  const std::size_t n = b.dim();
  std::vector<Tensor3> out(n, Tensor3(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& dk = d(k, i, j);
        if (dk.is_zero()) continue;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
              out[k](p, q, s) += dk * d(i, p, q) * b(s, j);
              out[k](p, q, s) -= dk * b(p, i) * d(j, q, s);
            }
      }
  return out;
}

inline Tensor3 random_tensor3(homalg::RationalSampler& rng, std::size_t n) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = rng.scalar();
  return t;
}

}  // namespace oracle
