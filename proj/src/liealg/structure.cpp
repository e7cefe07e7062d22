#include <omp.h>

#include "liecoh/error.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

namespace liecoh {

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<JacobiViolation>> per_i(n);
  const auto n_signed = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic) if (n >= 8)
  for (std::ptrdiff_t si = 0; si < n_signed; ++si) {
    const auto i = static_cast<std::size_t>(si);
    Vector acc(n);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (auto& x : acc) x = 0;
        // [e_a, [e_b, e_c]] summed over the three cyclic shifts.
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar& inner = g.c(t[1], t[2], m);
            if (sgn(inner) == 0) continue;
            for (std::size_t l = 0; l < n; ++l) {
              const Scalar& outer = g.c(t[0], m, l);
              if (sgn(outer) != 0) acc[l] += inner * outer;
            }
          }
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (sgn(acc[l]) != 0) per_i[i].push_back({i + 1, j + 1, k + 1, l + 1, acc[l]});
        }
      }
    }
  }

  std::vector<JacobiViolation> out;
  for (auto& v : per_i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool is_lie_algebra(const LieAlgebra& g) { return jacobi_check(g).empty(); }

void require_lie_algebra(const LieAlgebra& g) {
  const auto violations = jacobi_check(g);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorKind::NotALieAlgebra,
                "Jacobi identity fails: coefficient of e" + std::to_string(v.l) + " in J(e" +
                    std::to_string(v.i) + ",e" + std::to_string(v.j) + ",e" + std::to_string(v.k) +
                    ") is " + to_string(v.residual));
  }
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vectors;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const Vector vx = a.basis_vector(x);
    for (std::size_t y = 0; y < b.dim(); ++y) {
      Vector w = g.bracket(vx, b.basis_vector(y));
      if (!is_zero(w)) vectors.push_back(std::move(w));
    }
  }
  return Subspace::span(vectors, g.dim());
}

namespace {

template <typename Next>
std::vector<Subspace> iterate_series(const LieAlgebra& g, Next next) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (!series.back().is_zero()) {
    Subspace s = next(series.back());
    const bool stalled = s == series.back();
    series.push_back(std::move(s));
    if (stalled) break;
  }
  return series;
}

}  // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  return iterate_series(g, [&](const Subspace& prev) { return bracket_span(g, prev, whole); });
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  return iterate_series(g, [&](const Subspace& prev) { return bracket_span(g, prev, prev); });
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = g.c(i, j, k);
  return kernel(m);
}

SeriesReport series_report(const LieAlgebra& g) {
  require_lie_algebra(g);
  SeriesReport r;
  for (const auto& s : lower_central_series(g)) r.lower_central_dims.push_back(s.dim());
  for (const auto& s : derived_series(g)) r.derived_dims.push_back(s.dim());
  r.center_dim = center(g).dim();
  r.is_nilpotent = r.lower_central_dims.back() == 0;
  if (r.is_nilpotent) {
    r.nilindex = r.lower_central_dims.size() - 1;
    r.is_filiform = g.dim() >= 1 && *r.nilindex == g.dim() - 1;
  }
  return r;
}

Subspace invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix eqs(0, n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (auto& x : row) x = 0;
        // B([e_i,e_j], e_k) - B(e_i, [e_j,e_k])
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(g.c(i, j, m)) != 0) row[m * n + k] += g.c(i, j, m);
          if (sgn(g.c(j, k, m)) != 0) row[i * n + m] -= g.c(j, k, m);
        }
        if (!is_zero(row)) eqs.append_row(row);
      }
    }
  }
  return kernel(eqs);
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis) {
  const std::size_t n = g.dim();
  if (basis.rows() != n || basis.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "change_basis: matrix must be n x n");
  }
  const auto inv = inverse(basis);
  if (!inv) throw Error(ErrorKind::BadParam, "change_basis: basis matrix is singular");
  std::vector<BracketTerm> terms;
  for (std::size_t a = 0; a < n; ++a) {
    const Vector va = basis.column_vector(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector w = inv->apply(g.bracket(va, basis.column_vector(b)));
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(w[k]) != 0) terms.push_back({a, b, k, w[k]});
      }
    }
  }
  return LieAlgebra::from_terms(n, terms, g.label());
}

}  // namespace liecoh
