#include "liecoh/cohomology/cohomology.hpp"

#include <omp.h>

#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"

namespace liecoh {

TwoForm::TwoForm(Matrix m) : m_(std::move(m)) {
  if (!m_.is_skew_symmetric()) throw Error(ErrorKind::BadParam, "two-form matrix is not skew-symmetric");
}

TwoForm TwoForm::from_coordinates(std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch, "two-form coordinates: expected " + std::to_string(pair_count(n)));
  }
  TwoForm w = zero(n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w.set(i, j, coords[p++]);
  return w;
}

TwoForm& TwoForm::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i == j) throw Error(ErrorKind::BadIndex, "two-form: diagonal entries are zero");
  m_(i, j) = v;
  m_(j, i) = -v;
  return *this;
}

Vector TwoForm::coordinates() const {
  const std::size_t n = dim();
  Vector out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(m_(i, j));
  return out;
}

TwoForm& TwoForm::operator+=(const TwoForm& other) {
  m_ += other.m_;
  return *this;
}

namespace {

void require_dim(const LieAlgebra& g, const TwoForm& w) {
  if (w.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "two-form dimension differs from the algebra");
}

// Adds s * omega(e_m ^ e_k) to a row over pair coordinates.
void add_pair(Vector& row, std::size_t n, std::size_t m, std::size_t k, const Scalar& s) {
  if (m < k) {
    row[pair_index(n, m, k)] += s;
  } else if (m > k) {
    row[pair_index(n, k, m)] -= s;
  }
}

}  // namespace

bool is_two_cocycle(const LieAlgebra& g, const TwoForm& w) {
  require_dim(g, w);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Scalar acc;
        for (std::size_t m = 0; m < n; ++m) {
          acc += g.c(i, j, m) * w(m, k) - g.c(i, k, m) * w(m, j) + g.c(j, k, m) * w(m, i);
        }
        if (sgn(acc) != 0) return false;
      }
    }
  }
  return true;
}

TwoForm coboundary(const LieAlgebra& g, std::span<const Scalar> f) {
  const std::size_t n = g.dim();
  if (f.size() != n) throw Error(ErrorKind::DimensionMismatch, "coboundary: functional has wrong length");
  TwoForm w = TwoForm::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar v;
      for (std::size_t m = 0; m < n; ++m) v += f[m] * g.c(i, j, m);
      if (sgn(v) != 0) w.set(i, j, v);
    }
  }
  return w;
}

Subspace two_cocycles(const LieAlgebra& g) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  const std::size_t pc = pair_count(n);
  std::vector<std::vector<Vector>> per_i(n);
  const auto n_signed = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic) if (n >= 8)
  for (std::ptrdiff_t si = 0; si < n_signed; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector row(pc);
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(g.c(i, j, m)) != 0) add_pair(row, n, m, k, g.c(i, j, m));
          if (sgn(g.c(i, k, m)) != 0) add_pair(row, n, m, j, -g.c(i, k, m));
          if (sgn(g.c(j, k, m)) != 0) add_pair(row, n, m, i, g.c(j, k, m));
        }
        if (!is_zero(row)) per_i[i].push_back(std::move(row));
      }
    }
  }

  Matrix eqs(0, pc);
  for (const auto& rows : per_i)
    for (const auto& r : rows) eqs.append_row(r);
  return kernel(eqs);
}

Subspace two_coboundaries(const LieAlgebra& g) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  std::vector<Vector> images;
  for (std::size_t m = 0; m < n; ++m) images.push_back(coboundary(g, unit_vector(n, m)).coordinates());
  return Subspace::span(images, pair_count(n));
}

std::vector<Vector> canonical_complement(const Subspace& whole, const Subspace& sub) {
  const std::size_t amb = whole.ambient_dim();
  const Matrix& sb = sub.basis();
  Matrix reduced(0, amb);
  for (std::size_t r = 0; r < whole.dim(); ++r) {
    Vector v = whole.basis_vector(r);
    for (std::size_t t = 0; t < sub.dim(); ++t) {
      const std::size_t p = sub.pivots()[t];
      if (sgn(v[p]) == 0) continue;
      const Scalar f = v[p];
      for (std::size_t c = 0; c < amb; ++c) {
        if (sgn(sb(t, c)) != 0) v[c] -= f * sb(t, c);
      }
    }
    reduced.append_row(v);
  }
  const RrefResult red = rref(reduced);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < red.rank; ++r) out.push_back(red.reduced.row_vector(r));
  return out;
}

CohomologyResult h2(const LieAlgebra& g) {
  CohomologyResult r;
  r.z = two_cocycles(g);
  r.b = two_coboundaries(g);
  if (!r.z.contains(r.b)) throw Error(ErrorKind::InvariantViolation, "coboundaries are not cocycles");
  r.h_reps = canonical_complement(r.z, r.b);
  if (r.h_reps.size() != r.z.dim() - r.b.dim()) {
    throw Error(ErrorKind::InvariantViolation, "cohomology complement has the wrong dimension");
  }
  return r;
}

namespace {

void require_module(const LieAlgebra& g, const ModuleAction& m) {
  if (m.dim_g() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "module belongs to an algebra of other dimension");
}

}  // namespace

Subspace z1(const LieAlgebra& g, const ModuleAction& mod) {
  require_module(g, mod);
  const std::size_t n = g.dim();
  const std::size_t dm = mod.dim_m();
  const std::size_t vars = dm * n;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };

  std::vector<std::vector<Vector>> per_i(n);
  const auto n_signed = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (n * dm >= 64)
  for (std::ptrdiff_t si = 0; si < n_signed; ++si) {
    const auto i = static_cast<std::size_t>(si);
    const Matrix& ri = mod.rho(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix& rj = mod.rho(j);
      // phi([e_i,e_j]) - e_i . phi(e_j) + e_j . phi(e_i) = 0, row r.
      for (std::size_t r = 0; r < dm; ++r) {
        Vector row(vars);
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(g.c(i, j, m)) != 0) row[var(r, m)] += g.c(i, j, m);
        }
        for (std::size_t t = 0; t < dm; ++t) {
          if (sgn(ri(r, t)) != 0) row[var(t, j)] -= ri(r, t);
          if (sgn(rj(r, t)) != 0) row[var(t, i)] += rj(r, t);
        }
        if (!is_zero(row)) per_i[i].push_back(std::move(row));
      }
    }
  }
  Matrix eqs(0, vars);
  for (const auto& rows : per_i)
    for (const auto& r : rows) eqs.append_row(r);
  return kernel(eqs);
}

Subspace b1(const LieAlgebra& g, const ModuleAction& mod) {
  require_module(g, mod);
  const std::size_t n = g.dim();
  const std::size_t dm = mod.dim_m();
  std::vector<Vector> images;
  for (std::size_t v = 0; v < dm; ++v) {
    Vector img(dm * n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < dm; ++r) img[r * n + c] = mod.rho(c)(r, v);
    images.push_back(std::move(img));
  }
  return Subspace::span(images, dm * n);
}

H1Dims h1_dim(const LieAlgebra& g, const ModuleAction& m) {
  H1Dims d;
  const Subspace z = z1(g, m);
  const Subspace b = b1(g, m);
  if (!z.contains(b)) throw Error(ErrorKind::InvariantViolation, "B^1 is not contained in Z^1");
  d.dim_z = z.dim();
  d.dim_b = b.dim();
  d.dim_h = d.dim_z - d.dim_b;
  return d;
}

Subspace derivations(const LieAlgebra& g) { return z1(g, adjoint_module(g)); }

Matrix unflatten(std::span<const Scalar> coords, std::size_t rows, std::size_t cols) {
  if (coords.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "unflatten: wrong coordinate count");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coords[r * cols + c];
  return m;
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix form_to_coadjoint_cocycle(const TwoForm& w) { return w.matrix().transpose(); }

EmbeddingReport embedding_check(const LieAlgebra& g) {
  EmbeddingReport r;
  r.dim_h2 = h2(g).dim_h();
  r.dim_h1_coadjoint = h1_dim(g, coadjoint_module(g)).dim_h;
  r.dim_invariant_forms = invariant_forms(g).dim();
  r.equality = r.dim_h2 == r.dim_h1_coadjoint;
  if (r.dim_h2 > r.dim_h1_coadjoint) {
    throw Error(ErrorKind::InvariantViolation, "dim H^2(g,k) exceeds dim H^1(g,g*)");
  }
  if (r.dim_invariant_forms == 0 && !r.equality) {
    throw Error(ErrorKind::InvariantViolation, "H^2(g,k) and H^1(g,g*) differ although g has no invariant form");
  }
  return r;
}

}  // namespace liecoh
