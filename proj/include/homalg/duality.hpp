#pragma once

#include "homalg/algebra.hpp"
#include "homalg/coalgebra.hpp"

namespace homalg {

// Transpose duality in the dual basis e*_1..e*_n. With columns as images the
// transpose of a map is the transposed matrix.

// mu = Delta^*, alpha = beta^*, unit = counit: C(i, j, k) = D(k, i, j).
HomAlgebra dual_algebra_of_coalgebra(const HomCoalgebra& c);

// Delta = mu^*, beta = alpha^*, counit = unit: D(k, i, j) = C(i, j, k).
HomCoalgebra dual_coalgebra_of_algebra(const HomAlgebra& a);

// Whether C is a G-Hom-coalgebra exactly when its dual algebra is
// G-Hom-associative. Expected to hold for every input.
bool duality_defect_correspondence(const HomCoalgebra& c, Subgroup g);

}  // namespace homalg
