#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "liecoh/exactlin/scalar.hpp"

namespace liecoh {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  /// Stacks the given equal-length vectors as rows.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  const std::vector<Scalar>& entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Scalar> values);

  bool is_zero() const;
  bool is_skew_symmetric() const;
  Matrix transpose() const;

  Vector apply(std::span<const Scalar> v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const Scalar& s);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

/// a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Linear combination sum_i coeffs[i] * terms[i]; all terms share a shape.
Matrix combine(std::span<const Scalar> coeffs, std::span<const Matrix> terms);

}  // namespace liecoh
