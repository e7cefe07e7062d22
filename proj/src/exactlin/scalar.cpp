#include "liecoh/exactlin/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "liecoh/error.hpp"

namespace liecoh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::MissingParam: return "MissingParam";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotAdapted: return "NotAdapted";
    case ErrorKind::NotFiliformForm: return "NotFiliformForm";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::UnsupportedDim: return "UnsupportedDim";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::SingularCocycle: return "SingularCocycle";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  }
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Scalar(0));
  v.at(index) = 1;
  return v;
}

}  // namespace liecoh
