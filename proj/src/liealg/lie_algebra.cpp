#include "liecoh/liealg/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "liecoh/error.hpp"

namespace liecoh {

LieAlgebra::LieAlgebra(std::size_t dim, std::string label)
    : dim_(dim), label_(std::move(label)), constants_(dim * dim * dim, Scalar(0)) {}

LieAlgebra LieAlgebra::from_terms(std::size_t dim, std::span<const BracketTerm> terms,
                                  std::string label) {
  LieAlgebra g(dim, std::move(label));
  for (const auto& t : terms) {
    if (t.i >= t.j || t.j >= dim || t.k >= dim) {
      throw Error(ErrorKind::BadIndex, "bracket term (" + std::to_string(t.i + 1) + "," +
                                           std::to_string(t.j + 1) + "," + std::to_string(t.k + 1) +
                                           ") needs 1 <= i < j <= n and 1 <= k <= n");
    }
    g.constants_[(t.i * dim + t.j) * dim + t.k] += t.c;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& v = g.constants_[(i * dim + j) * dim + k];
        g.constants_[(j * dim + i) * dim + k] = -v;
        if (sgn(v) != 0) g.terms_.push_back({i, j, k, v});
      }
    }
  }
  return g;
}

LieAlgebra LieAlgebra::with_label(std::string label) const {
  LieAlgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "bracket: vectors must have length " + std::to_string(dim_));
  }
  Vector out(dim_, Scalar(0));
  for (const auto& t : terms_) {
    const Scalar w = x[t.i] * y[t.j] - x[t.j] * y[t.i];
    if (sgn(w) != 0) out[t.k] += w * t.c;
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t l = 0; l < dim_; ++l)
    for (std::size_t k = 0; k < dim_; ++k) m(k, l) = c(i, l, k);
  return m;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "ad: vector length");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t l = 0; l < dim_; ++l)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, l, k)) != 0) m(k, l) += x[i] * c(i, l, k);
  }
  return m;
}

std::uint64_t LieAlgebra::fingerprint() const {
  // FNV-1a over a canonical text rendering; stable across platforms.
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  feed(std::to_string(dim_) + ";");
  for (const auto& t : terms_) {
    feed(std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "=" +
         to_string(t.c) + ";");
  }
  return h;
}

LieAlgebraBuilder& LieAlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i == 0 || j == 0 || k == 0 || i > dim_ || j > dim_ || k > dim_ || i == j) {
    throw Error(ErrorKind::BadIndex, "builder: bad 1-based index triple");
  }
  if (i < j) {
    terms_.push_back({i - 1, j - 1, k - 1, c});
  } else {
    terms_.push_back({j - 1, i - 1, k - 1, -c});
  }
  return *this;
}

LieAlgebra LieAlgebraBuilder::build(std::string label) const {
  return LieAlgebra::from_terms(dim_, terms_, std::move(label));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string label) {
  std::vector<BracketTerm> terms = a.terms();
  const std::size_t shift = a.dim();
  for (const auto& t : b.terms()) terms.push_back({t.i + shift, t.j + shift, t.k + shift, t.c});
  return LieAlgebra::from_terms(a.dim() + b.dim(), terms, std::move(label));
}

}  // namespace liecoh
