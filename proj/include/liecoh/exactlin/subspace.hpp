#pragma once

#include <span>
#include <vector>

#include "liecoh/exactlin/linalg.hpp"

namespace liecoh {

/// Subspace of Q^ambient stored as the nonzero rows of an RREF matrix.
/// The representation is canonical: equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the rows of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Rows spanning the annihilator {y : y . x = 0 for all x in this}.
  Matrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace liecoh
