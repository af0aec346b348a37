#pragma once

#include <optional>
#include <vector>

#include "minorb/matrix.hpp"

namespace minorb {

// Exact rational Gaussian elimination kernels. Pivoting is by first nonzero
// entry; there is no numerical stability concern, only growth of numerators,
// which GMP absorbs.

// Row rank over Q.
int rank(const Mat& m);

// Exact determinant. Throws std::invalid_argument if not square.
Rat det(const Mat& m);

// Basis of the right null space {v : m v = 0}; empty iff injective.
std::vector<Vec> kernel_basis(const Mat& m);

// Some exact solution x of a x = b (b may have several columns), or
// std::nullopt when the system is inconsistent. Free variables are set to 0.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// Reduced row echelon form (returned), with pivot column indices in *pivots.
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr);

}  // namespace minorb
