#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecoh/exactlin/subspace.hpp"

namespace liecoh {

/// One nonzero structure constant c_{ij}^k with i < j, 0-based.
struct BracketTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar c;
};

/// Finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c_{ij}^k e_k. Only pairs i < j are ever supplied;
/// [e_j, e_i] = -[e_i, e_j] is implied. Indices are 0-based in the API and
/// 1-based in every serialized form. Values are immutable once built.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim, std::string label = {});

  /// Throws BadIndex for i >= j or out-of-range indices. Repeated (i,j,k)
  /// entries accumulate.
  static LieAlgebra from_terms(std::size_t dim, std::span<const BracketTerm> terms,
                               std::string label = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  LieAlgebra with_label(std::string label) const;

  /// c_{ij}^k for any ordered pair (antisymmetric extension).
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }

  /// Nonzero constants with i < j, sorted by (i, j, k).
  const std::vector<BracketTerm>& terms() const noexcept { return terms_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// Throws DimensionMismatch on wrong vector length.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// Matrix of ad(e_i): column l holds [e_i, e_l].
  Matrix ad(std::size_t i) const;
  Matrix ad(std::span<const Scalar> x) const;

  bool is_abelian() const noexcept { return terms_.empty(); }

  /// Stable 64-bit fingerprint of (dim, constants); labels are ignored.
  std::uint64_t fingerprint() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::size_t dim_ = 0;
  std::string label_;
  std::vector<Scalar> constants_;
  std::vector<BracketTerm> terms_;
};

/// Accumulates structure constants with 1-based indices, matching how
/// brackets are written down by hand.
class LieAlgebraBuilder {
 public:
  explicit LieAlgebraBuilder(std::size_t dim) : dim_(dim) {}

  /// [e_i, e_j] += c e_k, 1-based; i > j is accepted and stored negated.
  LieAlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  LieAlgebra build(std::string label = {}) const;

 private:
  std::size_t dim_;
  std::vector<BracketTerm> terms_;
};

/// One failed Jacobi coefficient: coefficient of e_l in
/// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]], 1-based, i<j<k.
struct JacobiViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  Scalar residual;
};

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);
bool is_lie_algebra(const LieAlgebra& g);
/// Throws NotALieAlgebra when the Jacobi identity fails.
void require_lie_algebra(const LieAlgebra& g);

/// g^0 = g, g^k = [g^{k-1}, g]. Stops at the zero subspace or, for
/// non-nilpotent algebras, after the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
/// D^0 = g, D^k = [D^{k-1}, D^{k-1}], same stopping rule.
std::vector<Subspace> derived_series(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
/// span{[x, y] : x in a, y in b}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

struct SeriesReport {
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  std::size_t center_dim = 0;
  std::optional<std::size_t> nilindex;
  bool is_nilpotent = false;
  bool is_filiform = false;
};

SeriesReport series_report(const LieAlgebra& g);

/// Bilinear forms B with B([x,y],z) = B(x,[y,z]); coordinates are the n^2
/// entries B(e_i,e_j) in row-major order.
Subspace invariant_forms(const LieAlgebra& g);

/// Re-expresses g in the basis whose a-th vector is column a of `basis`.
/// Throws BadParam when the matrix is singular.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string label = {});

}  // namespace liecoh
