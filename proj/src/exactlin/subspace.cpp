#include "liecoh/exactlin/subspace.hpp"

#include "liecoh/error.hpp"

namespace liecoh {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  const RrefResult red = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = Matrix(0, rows.cols());
  for (std::size_t r = 0; r < red.rank; ++r) s.basis_.append_row(red.reduced.row(r));
  s.pivots_ = red.pivot_columns;
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  return span(Matrix::from_rows(vectors, ambient));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "contains: vector length");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(w[p]) == 0) continue;
    const Scalar f = w[p];
    for (std::size_t c = p; c < ambient_; ++c) {
      if (sgn(basis_(i, c)) != 0) w[c] -= f * basis_(i, c);
    }
  }
  return liecoh::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Matrix Subspace::annihilator() const {
  return Matrix::from_rows(kernel_vectors(basis_), ambient_);
}

Subspace kernel(const Matrix& m) {
  return Subspace::span(kernel_vectors(m), m.cols());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "intersect: ambient dimensions differ");
  }
  // a = (ann a)^perp, so a and b meet in the kernel of both annihilators.
  return kernel(vstack(a.annihilator(), b.annihilator()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "sum: ambient dimensions differ");
  }
  return Subspace::span(vstack(a.basis(), b.basis()));
}

}  // namespace liecoh
