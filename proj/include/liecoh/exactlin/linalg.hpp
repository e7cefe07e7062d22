#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liecoh/exactlin/matrix.hpp"

namespace liecoh {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Row elimination for each pivot runs as an
/// OpenMP parallel loop over the rows; the result is identical to
/// rref_reference because RREF is unique.
RrefResult rref(const Matrix& m);

/// Single-threaded textbook Gauss-Jordan, kept as the comparison baseline
/// for tests and benchmarks.
RrefResult rref_reference(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact determinant by Bareiss fraction-free elimination on the
/// row-scaled integer matrix. Throws NonSquare.
Scalar det(const Matrix& m);

/// Plain rational Gaussian elimination, serial.
Scalar det_reference(const Matrix& m);

/// Particular solution of m x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis vectors of {v : m v = 0}, one per free column, in the standard
/// "free variable = 1" normalisation.
std::vector<Vector> kernel_vectors(const Matrix& m);

/// true iff m^n = 0 where n is the size of m. Throws NonSquare.
bool is_nilpotent_matrix(const Matrix& m);

}  // namespace liecoh
