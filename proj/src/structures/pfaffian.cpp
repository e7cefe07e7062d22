#include "liecoh/structures/pfaffian.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

bool is_zero_entry(const Scalar& s) { return sgn(s) == 0; }
bool is_zero_entry(const Polynomial& p) { return p.is_zero(); }

template <typename T, typename Entry>
T pfaffian_dp(std::size_t n, Entry entry) {
  if (n > 24) throw Error(ErrorKind::PreconditionViolated, "pfaffian: n <= 24 required");
  if (n % 2 == 1) return T(0);
  std::unordered_map<std::uint32_t, T> memo;
  // Pfaffian of the principal submatrix on the indices in `mask`.
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const auto i = static_cast<std::size_t>(__builtin_ctz(mask));
    const std::uint32_t rest = mask & (mask - 1);
    T acc(0);
    bool plus = true;
    for (std::uint32_t m = rest; m != 0; m &= m - 1) {
      const auto j = static_cast<std::size_t>(__builtin_ctz(m));
      const auto& a = entry(i, j);
      if (!is_zero_entry(a)) {
        T sub = self(self, rest & ~(std::uint32_t{1} << j));
        if (!is_zero_entry(sub)) {
          T term = a * sub;
          if (plus) {
            acc += term;
          } else {
            acc -= term;
          }
        }
      }
      plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (std::uint32_t{1} << n) - 1);
}

}  // namespace

Polynomial pfaffian(const std::vector<Polynomial>& entries, std::size_t n) {
  if (entries.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "pfaffian: expected n*n entries");
  return pfaffian_dp<Polynomial>(n, [&](std::size_t i, std::size_t j) -> const Polynomial& { return entries[i * n + j]; });
}

Scalar pfaffian(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "pfaffian: matrix must be square");
  if (!m.is_skew_symmetric()) throw Error(ErrorKind::BadParam, "pfaffian: matrix must be skew-symmetric");
  return pfaffian_dp<Scalar>(m.rows(), [&](std::size_t i, std::size_t j) -> const Scalar& { return m(i, j); });
}

double pfaffian_monomial_estimate(std::size_t forms, std::size_t n) {
  const std::size_t d = n / 2;
  if (forms == 0) return 1;
  return std::exp(std::lgamma(static_cast<double>(forms + d)) - std::lgamma(static_cast<double>(d + 1)) -
                  std::lgamma(static_cast<double>(forms)));
}

std::optional<Polynomial> generic_pfaffian(const std::vector<Matrix>& basis, double budget) {
  if (basis.empty()) return Polynomial();
  const std::size_t n = basis.front().rows();
  if (pfaffian_monomial_estimate(basis.size(), n) > budget) return std::nullopt;
  std::vector<Polynomial> entries(n * n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Polynomial t = Polynomial::variable(static_cast<std::uint16_t>(b));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(basis[b](i, j)) != 0) entries[i * n + j] += t * basis[b](i, j);
      }
  }
  return pfaffian(entries, n);
}

}  // namespace liecoh
