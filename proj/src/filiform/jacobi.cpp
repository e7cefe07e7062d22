#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include <omp.h>

#include "liecoh/error.hpp"
#include "liecoh/filiform/filiform.hpp"

namespace liecoh {

namespace detail {
void for_each_bracket_term(int n, const std::function<void(int, int, int, long long, const AlphaIndex&)>& visit);
}

const Polynomial* JacobiSystem::find(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  for (const auto& e : equations) {
    if (e.i == i && e.j == j && e.k == k && e.l == l) return &e.poly;
  }
  return nullptr;
}

std::optional<std::uint16_t> JacobiSystem::variable_of(const AlphaIndex& idx) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), idx);
  if (it == variables.end() || *it != idx) return std::nullopt;
  return static_cast<std::uint16_t>(it - variables.begin());
}

namespace {

std::unique_ptr<JacobiSystem> make_jacobi_system(int n) {
  auto sys = std::make_unique<JacobiSystem>();
  sys->n = n;
  sys->variables = index_set(n);
  const auto un = static_cast<std::size_t>(n);

  // Symbolic structure constants, dense and antisymmetric, 0-based.
  std::vector<Polynomial> c(un * un * un);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Polynomial& { return c[(i * un + j) * un + k]; };
  for (std::size_t i = 1; i + 1 < un; ++i) {
    at(0, i, i + 1) += Polynomial(1);
    at(i, 0, i + 1) -= Polynomial(1);
  }
  detail::for_each_bracket_term(n, [&](int i, int j, int r, long long coef, const AlphaIndex& idx) {
    const auto var = static_cast<std::uint16_t>(
        std::lower_bound(sys->variables.begin(), sys->variables.end(), idx) - sys->variables.begin());
    const Polynomial term = Polynomial::variable(var) * Scalar(static_cast<long>(coef));
    const auto ui = static_cast<std::size_t>(i - 1);
    const auto uj = static_cast<std::size_t>(j - 1);
    const auto ur = static_cast<std::size_t>(r - 1);
    at(ui, uj, ur) += term;
    at(uj, ui, ur) -= term;
  });

  std::vector<std::vector<JacobiSystem::Equation>> per_i(un);
  const auto n_signed = static_cast<std::ptrdiff_t>(un);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t si = 0; si < n_signed; ++si) {
    const auto i = static_cast<std::size_t>(si);
    std::vector<Polynomial> acc(un);
    for (std::size_t j = i + 1; j < un; ++j) {
      for (std::size_t k = j + 1; k < un; ++k) {
        for (auto& p : acc) p = Polynomial();
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          for (std::size_t m = 0; m < un; ++m) {
            const Polynomial& inner = at(t[1], t[2], m);
            if (inner.is_zero()) continue;
            for (std::size_t l = 0; l < un; ++l) {
              const Polynomial& outer = at(t[0], m, l);
              if (!outer.is_zero()) acc[l] += inner * outer;
            }
          }
        }
        for (std::size_t l = 0; l < un; ++l) {
          if (!acc[l].is_zero()) per_i[i].push_back({i + 1, j + 1, k + 1, l + 1, std::move(acc[l])});
        }
      }
    }
  }
  for (auto& v : per_i) {
    for (auto& e : v) sys->equations.push_back(std::move(e));
  }
  return sys;
}

}  // namespace

const JacobiSystem& jacobi_system(int n) {
  if (n < 4) throw Error(ErrorKind::RangeError, "jacobi_system: n >= 4 required");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<JacobiSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = make_jacobi_system(n);
  return *slot;
}

// --- weight-zero equations ------------------------------------------------

std::vector<Polynomial> low_jacobi_equations() {
  const Polynomial a = Polynomial::variable(0);  // alpha_{3,7}
  const Polynomial b = Polynomial::variable(1);  // alpha_{4,9}
  const Polynomial c = Polynomial::variable(2);  // alpha_{5,11}
  return {
      b * (Polynomial(2) + a) - Scalar(3) * a * a,
      c * (Polynomial(2) - a - b) + Scalar(2) * b * (Scalar(3) * b - Scalar(2) * a),
      Scalar(3) * c * (a + b) - Scalar(4) * b * b,
  };
}

namespace {

// Splits p = coef * x_var + rest where neither part contains x_var; throws
// if x_var occurs with a higher power.
std::pair<Polynomial, Polynomial> split_linear(const Polynomial& p, std::uint16_t var) {
  Polynomial coef;
  Polynomial rest;
  for (const auto& [m, c] : p.terms()) {
    Monomial reduced;
    unsigned power = 0;
    for (const auto& [v, e] : m) {
      if (v == var) {
        power = e;
      } else {
        reduced.emplace_back(v, e);
      }
    }
    if (power > 1) throw Error(ErrorKind::PreconditionViolated, "split_linear: variable occurs nonlinearly");
    (power == 1 ? coef : rest).add_term(reduced, c);
  }
  return {coef, rest};
}

// Solves the triangular system once alpha_{3,7} is fixed.
std::optional<LowTriple> finish_low(const std::vector<Polynomial>& eqs, const Scalar& a) {
  std::map<std::uint16_t, Scalar> values{{0, a}};
  auto substituted = [&](const Polynomial& p) { return p.substitute(values); };

  for (std::uint16_t var : {std::uint16_t{1}, std::uint16_t{2}}) {
    bool assigned = false;
    for (const auto& e : eqs) {
      const Polynomial q = substituted(e);
      if (q.variables() != std::set<std::uint16_t>{var} || q.degree() != 1) continue;
      const auto [coef, rest] = split_linear(q, var);
      values[var] = -rest.constant_term() / coef.constant_term();
      assigned = true;
      break;
    }
    if (!assigned) {
      // The remaining equations do not involve var: it is either forced by
      // being absent from every nonzero equation (then 0 is as good as any
      // value and the family is not isolated) or the case is inconsistent.
      bool appears = false;
      for (const auto& e : eqs) appears = appears || substituted(e).variables().count(var) > 0;
      if (appears) return std::nullopt;
      throw Error(ErrorKind::InvariantViolation, "weight-zero system has a non-isolated solution");
    }
  }
  for (const auto& e : eqs) {
    if (!substituted(e).is_zero()) return std::nullopt;
  }
  return LowTriple{values[0], values[1], values[2]};
}

}  // namespace

std::vector<LowTriple> jacobi_solve_low(const FiliformParams& p) {
  const int n = p.n();
  if (n < 12) throw Error(ErrorKind::PreconditionViolated, "jacobi_solve_low needs n >= 12");
  if (p.get(2, 5) != 1) throw Error(ErrorKind::PreconditionViolated, "jacobi_solve_low needs alpha_{2,5} = 1");
  if (n % 2 == 0 && sgn(p.get(n / 2, n)) != 0) {
    throw Error(ErrorKind::PreconditionViolated, "jacobi_solve_low needs alpha_{n/2,n} = 0");
  }

  const auto eqs = low_jacobi_equations();
  // E1 = L1 * b + R1 with L1, R1 in a. Off the zeros of L1, b = N_b / D_b.
  const auto [l1, r1] = split_linear(eqs[0], 1);
  const Polynomial nb = -r1;
  const Polynomial db = l1;
  // E3 = 3c(a + b) - 4b^2; times D_b^2: c * 3(a D_b + N_b) D_b - 4 N_b^2.
  const Polynomial a = Polynomial::variable(0);
  const Polynomial l3 = Scalar(3) * (a * db + nb) * db;
  const Polynomial nc = Scalar(4) * nb * nb;
  const Polynomial dc = l3;
  // E2 = c (2 - a - b) + 2b (3b - 2a), cleared by D_c D_b^2.
  const Polynomial f = nc * (Scalar(2) * db - a * db - nb) * db +
                       Scalar(2) * nb * (Scalar(3) * nb - Scalar(2) * a * db) * dc;
  if (f.is_zero()) throw Error(ErrorKind::InvariantViolation, "weight-zero elimination degenerated");

  std::set<Scalar> candidates;
  for (const Polynomial* q : {&f, &l1, &l3}) {
    if (q->is_constant()) continue;
    for (const auto& r : rational_roots(*q)) candidates.insert(r);
  }
  std::vector<LowTriple> out;
  for (const auto& cand : candidates) {
    if (auto t = finish_low(eqs, cand)) {
      if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
    }
  }
  return out;
}

// --- triangular completion ---------------------------------------------------

std::optional<FiliformParams> complete_jacobi(int n, const std::map<AlphaIndex, Scalar>& fixed,
                                              const FreeChooser& choose, PivotPreference pivots) {
  const JacobiSystem& sys = jacobi_system(n);
  std::map<std::uint16_t, Scalar> known;
  for (const auto& [idx, v] : fixed) {
    auto var = sys.variable_of(idx);
    if (!var) throw Error(ErrorKind::BadIndex, "complete_jacobi: alpha_{" + to_string(idx) + "} not a parameter");
    known[*var] = v;
  }

  std::vector<Polynomial> polys;
  polys.reserve(sys.equations.size());
  for (const auto& e : sys.equations) polys.push_back(e.poly.substitute(known));

  // Unknown picking order: grading weight, then (k, s).
  std::vector<std::uint16_t> order(sys.variables.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<std::uint16_t>(v);
  std::stable_sort(order.begin(), order.end(), [&](std::uint16_t x, std::uint16_t y) {
    return alpha_weight(sys.variables[x]) < alpha_weight(sys.variables[y]);
  });

  while (true) {
    std::vector<Polynomial> live;
    for (auto& p : polys) {
      if (p.is_zero()) continue;
      if (p.is_constant()) return std::nullopt;
      live.push_back(std::move(p));
    }
    polys = std::move(live);
    if (known.size() == sys.variables.size()) break;

    std::map<std::uint16_t, Scalar> fresh;
    std::set<std::uint16_t> pivot_vars;

    std::vector<const Polynomial*> linear;
    std::set<std::uint16_t> linear_vars;
    for (const auto& p : polys) {
      if (p.degree() == 1) {
        linear.push_back(&p);
        for (auto v : p.variables()) linear_vars.insert(v);
      }
    }
    if (!linear.empty()) {
      std::vector<std::uint16_t> cols(linear_vars.begin(), linear_vars.end());
      if (pivots == PivotPreference::HighIndex) std::reverse(cols.begin(), cols.end());
      Matrix aug(linear.size(), cols.size() + 1);
      for (std::size_t r = 0; r < linear.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) aug(r, c) = linear[r]->linear_coefficient(cols[c]);
        aug(r, cols.size()) = -linear[r]->constant_term();
      }
      const RrefResult red = rref(aug);
      if (!red.pivot_columns.empty() && red.pivot_columns.back() == cols.size()) return std::nullopt;
      for (std::size_t r = 0; r < red.rank; ++r) {
        const std::size_t pc = red.pivot_columns[r];
        pivot_vars.insert(cols[pc]);
        bool determined = true;
        for (std::size_t c = pc + 1; c < cols.size(); ++c) {
          if (sgn(red.reduced(r, c)) != 0) {
            determined = false;
            break;
          }
        }
        if (determined) fresh[cols[pc]] = red.reduced(r, cols.size());
      }
    }

    if (fresh.empty()) {
      for (std::uint16_t v : order) {
        if (known.count(v) || pivot_vars.count(v)) continue;
        fresh[v] = choose(sys.variables[v]);
        break;
      }
    }
    if (fresh.empty()) return std::nullopt;

    for (auto& p : polys) p = p.substitute(fresh);
    known.insert(fresh.begin(), fresh.end());
  }

  FiliformParams out(n);
  for (const auto& [v, value] : known) out.set(sys.variables[v], value);
  return out;
}

FiliformParams jacobi_closure(const FiliformParams& p, Branch branch) {
  const int n = p.n();
  if (n < 12 || n % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "jacobi_closure: even n >= 12 required");
  if (p.get(2, 5) != 1) throw Error(ErrorKind::PreconditionViolated, "jacobi_closure: alpha_{2,5} must be 1");
  if (sgn(p.get(n / 2, n)) != 0) {
    throw Error(ErrorKind::PreconditionViolated, "jacobi_closure: alpha_{n/2,n} must vanish");
  }
  const Scalar spine = branch == Branch::A1 ? Scalar(0) : Scalar(1, 10);
  if (p.get(3, 7) != spine) {
    throw Error(ErrorKind::PreconditionViolated,
                std::string("jacobi_closure: branch ") + (branch == Branch::A1 ? "A1" : "A2") +
                    " needs alpha_{3,7} = " + to_string(spine));
  }

  std::map<AlphaIndex, Scalar> fixed;
  for (const auto& idx : index_set(n)) {
    if (idx.k == 2) fixed[idx] = p.get(idx);
  }
  fixed[{3, 7}] = spine;
  fixed[{n / 2, n}] = 0;

  auto result = complete_jacobi(
      n, fixed, [&](const AlphaIndex& idx) { return p.get(idx); }, PivotPreference::HighIndex);
  if (!result || !is_lie_algebra(build(*result))) {
    throw Error(ErrorKind::NoSolution, "jacobi_closure: no Jacobi-consistent completion of the free parameters");
  }
  return *result;
}

FiliformParams jacobi_closure_12(const FiliformParams& p, Branch branch) {
  if (p.n() != 12) throw Error(ErrorKind::PreconditionViolated, "jacobi_closure_12: n must be 12");
  return jacobi_closure(p, branch);
}

}  // namespace liecoh
