#pragma once
// Oracles written against raw structure constants and plain GMP, so they do
// not share code paths with the library, plus hand-rolled generators.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "liecoh/filiform/filiform.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

// Textbook Gaussian elimination on a copy.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; fine up to n = 7.
inline Q det_leibniz(const Rows& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Q total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Q term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Linear conditions on omega(e_a ^ e_b), a < b, expressing
// omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0.
inline Rows cocycle_equations(const liecoh::LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  int count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) idx[a][b] = count++;
  Rows eqs;
  const auto put = [&](std::vector<Q>& row, std::size_t a, std::size_t b, const Q& c) {
    if (a == b) return;
    if (a < b) row[idx[a][b]] += c;
    else row[idx[b][a]] -= c;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::vector<Q> row(count);
        for (std::size_t m = 0; m < n; ++m) {
          put(row, m, z, g.c(x, y, m));
          put(row, m, x, g.c(y, z, m));
          put(row, m, y, g.c(z, x, m));
        }
        eqs.push_back(std::move(row));
      }
  return eqs;
}

inline std::size_t dim_z2(const liecoh::LieAlgebra& g) {
  const std::size_t n = g.dim();
  return n * (n - 1) / 2 - rank(cocycle_equations(g));
}

// dim [g, g]: rank of all bracket vectors.
inline std::size_t dim_derived(const liecoh::LieAlgebra& g) {
  const std::size_t n = g.dim();
  Rows rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Q> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.c(i, j, k);
      rows.push_back(std::move(v));
    }
  return rank(rows);
}

inline std::size_t dim_h2(const liecoh::LieAlgebra& g) { return dim_z2(g) - dim_derived(g); }

// Is omega (full skew matrix) a cocycle, straight from the definition.
inline bool is_cocycle(const liecoh::LieAlgebra& g, const Rows& w) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Q s = 0;
        for (std::size_t m = 0; m < n; ++m) {
          s += g.c(x, y, m) * w[m][z] + g.c(y, z, m) * w[m][x] + g.c(z, x, m) * w[m][y];
        }
        if (s != 0) return false;
      }
  return true;
}

}  // namespace oracle

namespace gen {

// splitmix64 stream; deliberately separate from the library's generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long between(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  mpq_class rational(long bound = 9) {
    mpq_class q(between(-bound, bound), between(1, bound));
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

inline liecoh::Matrix matrix(Rng& r, std::size_t rows, std::size_t cols, int zero_percent = 30) {
  liecoh::Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (r.between(0, 99) >= zero_percent) m(i, j) = r.rational();
  return m;
}

inline liecoh::Matrix skew(Rng& r, std::size_t n) {
  liecoh::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = r.rational(5);
      m(j, i) = -m(i, j);
    }
  return m;
}

// A Jacobi-consistent filiform point: triangular completion with random
// small choices for n <= 10, the two-branch closure for even n >= 12.
inline std::optional<liecoh::FiliformParams> filiform(Rng& r, int n) {
  using namespace liecoh;
  if (n >= 12) {
    FiliformParams p(n);
    p.set(2, 5, 1);
    const bool a2 = r.between(0, 1) == 1;
    if (a2) p.set(3, 7, mpq_class(1, 10));
    for (int s = 6; s <= n; ++s) p.set(2, s, r.between(-2, 2));
    for (int s = 8; s <= n; ++s) p.set(3, s, r.between(-2, 2));
    try {
      return jacobi_closure(p, a2 ? Branch::A2 : Branch::A1);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return complete_jacobi(n, {}, [&](const AlphaIndex&) { return Scalar(r.between(-2, 2)); });
}

}  // namespace gen
