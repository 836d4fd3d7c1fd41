#include "homalg/duality.hpp"

namespace homalg {

HomAlgebra dual_algebra_of_coalgebra(const HomCoalgebra& c) {
  const std::size_t n = c.dim();
  MulTensor mul(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mul(i, j, k) = c.comul()(k, i, j);
  return HomAlgebra(std::move(mul), c.beta().transpose(), c.counit());
}

HomCoalgebra dual_coalgebra_of_algebra(const HomAlgebra& a) {
  const std::size_t n = a.dim();
  ComulTensor comul(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) comul(k, i, j) = a.mul()(i, j, k);
  return HomCoalgebra(std::move(comul), a.alpha().transpose(), a.unit());
}

bool duality_defect_correspondence(const HomCoalgebra& c, Subgroup g) {
  return check_G_hom_coalgebra(c, g).holds() == check_G_hom_associative(dual_algebra_of_coalgebra(c), g).holds();
}

}  // namespace homalg
