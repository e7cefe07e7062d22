#pragma once

#include <optional>
#include <vector>

#include "liecoh/exactlin/matrix.hpp"
#include "liecoh/exactlin/polynomial.hpp"

namespace liecoh {

/// Pfaffian of a skew matrix with polynomial entries (row-major, n x n),
/// by expansion along the first row with memoisation over index subsets.
/// Odd n gives 0. Requires n <= 24.
Polynomial pfaffian(const std::vector<Polynomial>& entries, std::size_t n);

/// Pfaffian of an exact skew matrix; pf^2 = det.
Scalar pfaffian(const Matrix& m);

/// Upper estimate of the number of monomials of the Pfaffian of
/// sum_b t_b M_b for `forms` skew n x n matrices: C(forms + n/2 - 1, n/2).
double pfaffian_monomial_estimate(std::size_t forms, std::size_t n);

/// The Pfaffian of sum_b t_b basis[b] as a polynomial in t_0, t_1, ...
/// Returns nullopt when the monomial estimate exceeds `budget`.
std::optional<Polynomial> generic_pfaffian(const std::vector<Matrix>& basis, double budget);

}  // namespace liecoh
