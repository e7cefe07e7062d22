#pragma once

#include "liecoh/cohomology/module_action.hpp"

namespace liecoh {

/// Bilinear product e_i . e_j = sum_k c(i, j, k) e_k on a vector space.
class LSAProduct {
 public:
  explicit LSAProduct(std::size_t dim = 0) : dim_(dim), constants_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return constants_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }
  Vector product(std::span<const Scalar> x, std::span<const Scalar> y) const;

 private:
  std::size_t dim_;
  std::vector<Scalar> constants_;
};

/// x.(y.z) - (x.y).z = y.(x.z) - (y.x).z on all basis triples.
bool is_left_symmetric(const LSAProduct& p);
/// x.y - y.x = [x, y] on all basis pairs.
bool is_compatible(const LieAlgebra& g, const LSAProduct& p);

/// x . y = phi^{-1}(x . phi(y)) for a nonsingular phi in Z^1(g, M),
/// dim M = dim g. Throws NotACocycle, SingularCocycle or DimensionMismatch;
/// the result is re-verified before it is returned.
LSAProduct lsa_from_cocycle(const LieAlgebra& g, const ModuleAction& m, const Matrix& phi);

}  // namespace liecoh
