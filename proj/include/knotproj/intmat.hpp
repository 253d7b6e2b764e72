#pragma once

#include "knotproj/laurent.hpp"

#include <cstddef>
#include <vector>

namespace knotproj {

/// Row-major integer matrix (possibly 0x0).
using IntMat = std::vector<std::vector<Int>>;

bool is_square(const IntMat& m);
IntMat transpose(const IntMat& m);
IntMat negated(const IntMat& m);
IntMat mat_add(const IntMat& a, const IntMat& b);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(std::size_t n);
IntMat block_diag(const IntMat& a, const IntMat& b);

/// Exact determinant of a square integer matrix (fraction-free elimination);
/// det of the 0x0 matrix is 1.
Int int_det(IntMat m);

}  // namespace knotproj
