#pragma once

#include <span>

#include "liecoh/exactlin/matrix.hpp"

namespace liecoh {

/// Number of coordinates of a skew form on an n-dimensional space.
inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Position of the pair (i, j), i < j, 0-based, in the lexicographic order
/// (0,1), (0,2), ..., (n-2,n-1).
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Skew-symmetric bilinear form omega(e_i ^ e_j) = matrix(i, j).
class TwoForm {
 public:
  TwoForm() = default;
  /// Throws BadParam if the matrix is not skew-symmetric.
  explicit TwoForm(Matrix m);
  static TwoForm zero(std::size_t n) { return TwoForm(Matrix(n, n)); }
  /// From coordinates in pair order.
  static TwoForm from_coordinates(std::size_t n, std::span<const Scalar> coords);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// Sets omega(e_i ^ e_j) = v and omega(e_j ^ e_i) = -v (0-based, i != j).
  TwoForm& set(std::size_t i, std::size_t j, const Scalar& v);

  Vector coordinates() const;

  TwoForm& operator+=(const TwoForm& other);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator*(const Scalar& s, const TwoForm& a) { return TwoForm(s * a.m_); }

  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  Matrix m_;
};

}  // namespace liecoh
