#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

/// Arbitrary-precision rational. GMP keeps every mpq result canonical
/// (gcd(num, den) = 1, den > 0), which the rest of the engine relies on.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q", "-p/q" or "p". Throws Error{ParseError} on anything else,
/// including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);

}  // namespace liecoh
