#include "liecoh/exactlin/linalg.hpp"

#include <omp.h>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

// Below this many entries the thread fork costs more than the elimination.
constexpr std::size_t kParallelThreshold = 2048;

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, std::string(what) + ": matrix is not square");
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const bool parallel = rows * cols >= kParallelThreshold;

  std::size_t lead = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t p = lead;
    while (p < rows && sgn(a(p, col)) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, lead);

    const Scalar inv = 1 / a(lead, col);
    support.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (sgn(a(lead, c)) != 0) {
        a(lead, c) *= inv;
        support.push_back(c);
      }
    }

    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (ur == lead || sgn(a(ur, col)) == 0) continue;
      const Scalar factor = a(ur, col);
      for (std::size_t c : support) a(ur, c) -= factor * a(lead, c);
    }

    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

RrefResult rref_reference(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, lead);
    const Scalar pivot = a(lead, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(lead, c) /= pivot;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= factor * a(lead, c);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar det(const Matrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);

  // Clear denominators row by row so the elimination runs over Z.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    scale *= row_lcm;
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& x = m(r, c);
      a[r * n + c] = x.get_num() * (row_lcm / x.get_den());
    }
  }

  int sign = 1;
  mpz_class prev = 1;
  const bool parallel = n * n >= kParallelThreshold / 4;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Scalar(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const auto first = static_cast<std::ptrdiff_t>(k + 1);
    const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t si = first; si < last; ++si) {
      const auto i = static_cast<std::size_t>(si);
      mpz_class t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Scalar result(a[n * n - 1] * sign, scale);
  result.canonicalize();
  return result;
}

Scalar det_reference(const Matrix& m) {
  require_square(m, "det_reference");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      a.swap_rows(p, k);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const Scalar factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return result;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = red.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

std::vector<Vector> kernel_vectors(const Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_columns[i]] = -red.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_nilpotent_matrix(const Matrix& m) {
  require_square(m, "is_nilpotent_matrix");
  const std::size_t n = m.rows();
  if (n == 0) return true;
  Matrix power = m;
  for (std::size_t k = 1; k < n; ++k) {
    if (power.is_zero()) return true;
    power = power * m;
  }
  return power.is_zero();
}

}  // namespace liecoh
