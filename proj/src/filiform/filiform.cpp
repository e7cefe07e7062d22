#include "liecoh/filiform/filiform.hpp"

#include <algorithm>
#include <cstdlib>

#include "liecoh/error.hpp"

namespace liecoh {

std::string to_string(const AlphaIndex& idx) {
  return std::to_string(idx.k) + "," + std::to_string(idx.s);
}

int alpha_weight(const AlphaIndex& idx) { return idx.s - 2 * idx.k - 1; }

std::vector<AlphaIndex> index_set(int n) {
  std::vector<AlphaIndex> out;
  for (int k = 2; k <= n / 2; ++k)
    for (int s = 2 * k + 1; s <= n; ++s) out.push_back({k, s});
  if (n % 2 == 0 && n >= 4) out.push_back({n / 2, n});
  std::sort(out.begin(), out.end());
  return out;
}

bool in_index_set(int n, const AlphaIndex& idx) {
  if (n % 2 == 0 && idx.k == n / 2 && idx.s == n) return true;
  return idx.k >= 2 && idx.k <= n / 2 && idx.s >= 2 * idx.k + 1 && idx.s <= n;
}

FiliformParams::FiliformParams(int n) : n_(n) {
  if (n < 4) throw Error(ErrorKind::RangeError, "filiform parameters need n >= 4");
}

FiliformParams& FiliformParams::set(int k, int s, const Scalar& value) {
  if (!in_index_set(n_, {k, s})) {
    throw Error(ErrorKind::BadIndex, "alpha_{" + std::to_string(k) + "," + std::to_string(s) +
                                         "} is not a parameter in dimension " + std::to_string(n_));
  }
  if (sgn(value) == 0) {
    alpha_.erase({k, s});
  } else {
    alpha_[{k, s}] = value;
  }
  return *this;
}

Scalar FiliformParams::get(int k, int s) const {
  auto it = alpha_.find({k, s});
  return it == alpha_.end() ? Scalar(0) : it->second;
}

namespace {

long long binomial(int top, int bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  long long r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

}  // namespace

namespace detail {

// Calls visit(i, j, r, coefficient, alpha index) for every term of the
// bracket formula with 1-based 2 <= i < j <= n whose parameter lies in the
// index set. Shared by the numeric and the symbolic builders.
void for_each_bracket_term(int n, const std::function<void(int, int, int, long long, const AlphaIndex&)>& visit) {
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int r = 1; r <= n; ++r) {
        for (int l = 0; l <= (j - i - 1) / 2; ++l) {
          const AlphaIndex idx{i + l, r - j + i + 2 * l + 1};
          if (!in_index_set(n, idx)) continue;
          const long long coef = (l % 2 == 0 ? 1 : -1) * binomial(j - i - l - 1, l);
          if (coef != 0) visit(i, j, r, coef, idx);
        }
      }
    }
  }
}

}  // namespace detail

LieAlgebra build(const FiliformParams& p, std::string label) {
  const int n = p.n();
  LieAlgebraBuilder b(static_cast<std::size_t>(n));
  for (int i = 2; i < n; ++i) b.add(1, static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1), 1);
  detail::for_each_bracket_term(n, [&](int i, int j, int r, long long coef, const AlphaIndex& idx) {
    const Scalar a = p.get(idx);
    if (sgn(a) != 0) {
      b.add(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(r),
            a * Scalar(static_cast<long>(coef)));
    }
  });
  return b.build(std::move(label));
}

FiliformParams extract_params(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n < 4) throw Error(ErrorKind::NotAdapted, "adapted filiform bases need n >= 4");
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar expected = (i + 1 < n && k == i + 1) ? Scalar(1) : Scalar(0);
      if (g.c(0, i, k) != expected) {
        throw Error(ErrorKind::NotAdapted, "[e1,e" + std::to_string(i + 1) + "] does not match the adapted pattern");
      }
    }
  }
  FiliformParams p(static_cast<int>(n));
  // [e_k, e_{k+1}] = sum_s alpha_{k,s} e_s.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      const Scalar& v = g.c(k, k + 1, s);
      if (sgn(v) == 0) continue;
      const AlphaIndex idx{static_cast<int>(k + 1), static_cast<int>(s + 1)};
      if (!in_index_set(static_cast<int>(n), idx)) {
        throw Error(ErrorKind::NotFiliformForm, "[e" + std::to_string(k + 1) + ",e" + std::to_string(k + 2) +
                                                    "] has a component outside the parameter range");
      }
      p.set(idx, v);
    }
  }
  if (!(build(p) == g)) {
    throw Error(ErrorKind::NotFiliformForm, "brackets are not of adapted filiform form");
  }
  return p;
}

TwoForm omega_ell(int n, int ell) {
  if (n < 3 || ell < 1 || ell > (n - 1) / 2) {
    throw Error(ErrorKind::RangeError, "omega_" + std::to_string(ell) + " undefined in dimension " + std::to_string(n));
  }
  TwoForm w = TwoForm::zero(static_cast<std::size_t>(n));
  for (int k = 2; k <= (2 * ell + 3) / 2; ++k) {
    const int other = 2 * ell + 3 - k;
    w.set(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(other - 1), Scalar(k % 2 == 0 ? 1 : -1));
  }
  return w;
}

FiliformParams rescale(const FiliformParams& p, const Scalar& a, const Scalar& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error(ErrorKind::BadParam, "rescale: a and b must be nonzero");
  FiliformParams out(p.n());
  for (const auto& [idx, v] : p.alpha()) {
    Scalar factor = b;
    const int e = idx.s - 2 * idx.k + 1;
    for (int t = 0; t < std::abs(e); ++t) {
      if (e > 0) {
        factor /= a;
      } else {
        factor *= a;
      }
    }
    out.set(idx, v * factor);
  }
  return out;
}

LieAlgebra adapted_rescale(const LieAlgebra& g, const Scalar& a, const Scalar& b) {
  const std::size_t n = g.dim();
  if (n < 2) throw Error(ErrorKind::BadParam, "adapted_rescale: dimension too small");
  if (sgn(a) == 0 || sgn(b) == 0) throw Error(ErrorKind::BadParam, "adapted_rescale: a and b must be nonzero");
  Matrix basis(n, n);
  std::vector<Vector> images(n);
  images[0] = unit_vector(n, 0);
  images[0][0] = a;
  images[1] = unit_vector(n, 1);
  images[1][1] = b;
  for (std::size_t i = 2; i < n; ++i) images[i] = g.bracket(images[0], images[i - 1]);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = images[c][r];
  return change_basis(g, basis);
}

std::string ClassLabel::name() const {
  const std::string nn = std::to_string(n);
  switch (family) {
    case ClassFamily::Table: return "A_" + nn + "_" + std::to_string(index);
    case ClassFamily::Series1: return "A_" + nn + "^1";
    case ClassFamily::Series2: return "A_" + nn + "^2";
    case ClassFamily::Series2Refined: return "A_" + nn + "_" + std::to_string(index) + "^2";
    case ClassFamily::Series3: return "A_" + nn + "^3";
    case ClassFamily::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

Scalar p14(const FiliformParams& p) {
  const Scalar a38 = p.get(3, 8);
  const Scalar a26 = p.get(2, 6);
  const Scalar a27 = p.get(2, 7);
  const Scalar a28 = p.get(2, 8);
  const Scalar num = Scalar(482832810500) * a38 * a38 * a38 - Scalar(157196008500) * a38 * a38 * a26 +
                     Scalar(2223828750) * a38 * a27 + Scalar(16180336845) * a38 * a26 * a26 +
                     Scalar(186801615) * a28 - Scalar(266859450) * a27 * a26 -
                     Scalar(517476276) * a26 * a26 * a26;
  return num / Scalar(1307611305);
}

namespace {

ClassLabel table_label(int n, int index) { return {ClassFamily::Table, n, index}; }

ClassLabel classify_table(const FiliformParams& p) {
  const int n = p.n();
  const auto a = [&](int k, int s) { return p.get(k, s); };
  const auto nz = [](const Scalar& x) { return sgn(x) != 0; };
  switch (n) {
    case 4:
      return table_label(4, 1);
    case 6:
      return table_label(6, nz(a(3, 6)) ? 1 : 2);
    case 8: {
      const Scalar t = 2 * a(2, 5) + a(3, 7);
      if (nz(a(4, 8))) {
        return nz(t) ? ClassLabel{ClassFamily::Unclassified, 8, 0} : table_label(8, 1);
      }
      if (nz(t)) return table_label(8, 2);
      return table_label(8, nz(a(2, 5)) ? 3 : 4);
    }
    case 10: {
      const Scalar t = 2 * a(2, 5) + a(3, 7);
      if (nz(a(5, 10))) return table_label(10, nz(t) ? 1 : 2);
      if (nz(t)) return table_label(10, a(3, 7) * a(3, 7) != a(2, 5) * a(2, 5) ? 3 : 4);
      if (nz(a(4, 9))) {
        return table_label(10, nz(a(2, 6) * a(2, 6) + 2 * a(2, 7) * a(4, 9)) ? 5 : 6);
      }
      if (nz(2 * a(2, 7) + a(3, 9))) return table_label(10, 7);
      const Scalar f = 3 * a(4, 10) * (a(2, 6) + a(3, 8)) - 4 * a(3, 8) * a(3, 8);
      return table_label(10, nz(f) ? 8 : 9);
    }
    default:
      break;
  }
  throw Error(ErrorKind::UnsupportedDim, "no class table in dimension " + std::to_string(n));
}

}  // namespace

ClassLabel classify(const FiliformParams& p) {
  const int n = p.n();
  if (n == 4 || n == 6 || n == 8 || n == 10) return classify_table(p);
  if (n < 12) throw Error(ErrorKind::UnsupportedDim, "no classification in dimension " + std::to_string(n));

  const Scalar a25 = p.get(2, 5);
  if (sgn(a25) == 0) return {ClassFamily::Unclassified, n, 0};
  if (n % 2 == 0 && sgn(p.get(n / 2, n)) != 0) return {ClassFamily::Series3, n, 0};
  if (sgn(p.get(3, 7)) == 0) return {ClassFamily::Series1, n, 0};
  if (n != 14) return {ClassFamily::Series2, n, 0};
  const FiliformParams normal = rescale(p, Scalar(1), 1 / a25);
  return {ClassFamily::Series2Refined, n, normal.get(3, 10) == p14(normal) ? 1 : 2};
}

}  // namespace liecoh
