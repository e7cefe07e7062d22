#include "liecoh/exactlin/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/error.hpp"

namespace liecoh {

Polynomial::Polynomial(const Scalar& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(std::uint16_t index) {
  Polynomial p;
  p.terms_.emplace(Monomial{{index, 1}}, Scalar(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned md = 0;
    for (const auto& [v, e] : m) md += e;
    d = std::max(d, md);
  }
  return d;
}

std::set<std::uint16_t> Polynomial::variables() const {
  std::set<std::uint16_t> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vars.insert(v);
  return vars;
}

Scalar Polynomial::linear_coefficient(std::uint16_t var) const {
  auto it = terms_.find(Monomial{{var, 1}});
  return it == terms_.end() ? Scalar(0) : it->second;
}

namespace {

Scalar power(const Scalar& base, unsigned exp) {
  Scalar r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Scalar Polynomial::evaluate(std::span<const Scalar> values) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [v, e] : m) {
      if (v >= values.size()) throw Error(ErrorKind::DimensionMismatch, "evaluate: missing variable value");
      t *= power(values[v], e);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::map<std::uint16_t, Scalar>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.emplace_back(v, e);
      } else {
        coeff *= power(it->second, e);
      }
    }
    if (sgn(coeff) != 0) out.add_term(rest, coeff);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, static_cast<std::uint16_t>(ia->second + ib->second));
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << liecoh::to_string(c);
    for (const auto& [v, e] : m) {
      os << '*' << (v < names.size() ? names[v] : "x" + std::to_string(v));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class value) {
  if (value < 0) value = -value;
  if (value > mpz_class("100000000000000")) {
    throw Error(ErrorKind::PreconditionViolated, "rational_roots: coefficient too large for divisor search");
  }
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      small.push_back(d);
      if (d * d != value) large.push_back(value / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::PreconditionViolated, "rational_roots: zero polynomial");
  const auto vars = p.variables();
  if (vars.size() > 1) throw Error(ErrorKind::PreconditionViolated, "rational_roots: not univariate");
  if (vars.empty()) return {};
  const std::uint16_t var = *vars.begin();

  const unsigned d = p.degree();
  std::vector<Scalar> coeff(d + 1, Scalar(0));
  for (const auto& [m, c] : p.terms()) coeff[m.empty() ? 0 : m.front().second] = c;

  mpz_class lcm = 1;
  for (const auto& c : coeff) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints(d + 1);
  for (unsigned i = 0; i <= d; ++i) ints[i] = coeff[i].get_num() * (lcm / coeff[i].get_den());

  std::vector<Scalar> roots;
  unsigned low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);

  const Polynomial reduced = p;
  auto eval = [&](const Scalar& x) {
    std::vector<Scalar> values(var + 1u, Scalar(0));
    values[var] = x;
    return reduced.evaluate(values);
  };
  for (const auto& num : positive_divisors(ints[low])) {
    for (const auto& den : positive_divisors(ints[d])) {
      for (int s : {1, -1}) {
        Scalar cand(num * s, den);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (sgn(eval(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace liecoh
