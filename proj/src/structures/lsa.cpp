#include "liecoh/structures/lsa.hpp"

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"

namespace liecoh {

Vector LSAProduct::product(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "LSA product: wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(c(i, j, k)) != 0) out[k] += xy * c(i, j, k);
      }
    }
  }
  return out;
}

bool is_left_symmetric(const LSAProduct& p) {
  const std::size_t n = p.dim();
  // Basis products e_i . e_j as vectors.
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = p.c(i, j, k);
      prod[i * n + j] = std::move(v);
    }
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    Vector left = p.product(unit_vector(n, x), prod[y * n + z]);
    const Vector right = p.product(prod[x * n + y], unit_vector(n, z));
    for (std::size_t k = 0; k < n; ++k) left[k] -= right[k];
    return left;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (assoc(x, y, z) != assoc(y, x, z)) return false;
      }
  return true;
}

bool is_compatible(const LieAlgebra& g, const LSAProduct& p) {
  const std::size_t n = g.dim();
  if (p.dim() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (p.c(i, j, k) - p.c(j, i, k) != g.c(i, j, k)) return false;
      }
  return true;
}

LSAProduct lsa_from_cocycle(const LieAlgebra& g, const ModuleAction& m, const Matrix& phi) {
  const std::size_t n = g.dim();
  if (m.dim_g() != n || m.dim_m() != n || phi.rows() != n || phi.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "lsa_from_cocycle: module and cocycle must have the algebra's dimension");
  }
  if (!z1(g, m).contains(flatten(phi))) throw Error(ErrorKind::NotACocycle, "phi is not a 1-cocycle");
  const auto inv = inverse(phi);
  if (!inv) throw Error(ErrorKind::SingularCocycle, "phi is singular");

  LSAProduct p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = *inv * m.rho(i) * phi;  // L(e_i), column j = e_i . e_j
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) p.c(i, j, k) = left(k, j);
  }
  if (!is_compatible(g, p) || !is_left_symmetric(p)) {
    throw Error(ErrorKind::InvariantViolation, "constructed product is not a compatible left-symmetric product");
  }
  return p;
}

}  // namespace liecoh
