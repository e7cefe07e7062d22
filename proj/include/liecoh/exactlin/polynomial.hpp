#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/exactlin/scalar.hpp"

namespace liecoh {

/// Sparse monomial: (variable, exponent) pairs sorted by variable, no zero
/// exponents. The empty monomial is 1.
using Monomial = std::vector<std::pair<std::uint16_t, std::uint16_t>>;

/// Sparse multivariate polynomial over Q.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // NOLINT

  static Polynomial variable(std::uint16_t index);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  unsigned degree() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }

  std::set<std::uint16_t> variables() const;

  /// Coefficient of the degree-one monomial x_var.
  Scalar linear_coefficient(std::uint16_t var) const;

  /// Full evaluation; `values` must cover every variable that occurs.
  Scalar evaluate(std::span<const Scalar> values) const;

  /// Partial evaluation: replaces the variables present in `values`.
  Polynomial substitute(const std::map<std::uint16_t, Scalar>& values) const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form using names[var] (or x<var> when absent).
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::map<Monomial, Scalar> terms_;
};

Monomial multiply(const Monomial& a, const Monomial& b);

/// Distinct rational roots of a univariate polynomial, ascending. Throws
/// PreconditionViolated if more than one variable occurs or p is zero.
std::vector<Scalar> rational_roots(const Polynomial& p);

}  // namespace liecoh
