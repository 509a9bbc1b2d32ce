// Column-style Hermite normal form over Z: columns are generators, the result
// is lower "staircase" with positive pivots and, for a nonsingular square
// input, lower triangular with entries below the diagonal reduced modulo the
// diagonal of their row. The HNF is a complete invariant of the column span.
#pragma once

#include <vector>

#include "errors.hpp"
#include "types.hpp"

namespace a4ssl {

using IntMat = std::vector<std::vector<Int>>;  // row-major

// in-place column HNF of an arbitrary rows x cols integer matrix
void hnf_columns(IntMat& m);

// HNF of a nonsingular 4x4 matrix given by columns; also returns det (> 0)
IntMat hnf_square(const IntMat& m);

Int mat_det(const IntMat& m);  // exact, fraction-free

// is v in the Z-span of the columns of an HNF matrix?
bool hnf_span_contains(const IntMat& hnf, const std::vector<Int>& v);

IntMat mat_mul_int(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& a);

}  // namespace a4ssl
