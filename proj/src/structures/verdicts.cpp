#include "liecoh/structures/verdicts.hpp"

#include <functional>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"
#include "liecoh/structures/pfaffian.hpp"
#include "liecoh/structures/rng.hpp"

namespace liecoh {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::OddDimension: return "OddDimension";
    case CertificateKind::CommonKernelVector: return "CommonKernelVector";
    case CertificateKind::IsotropicPair: return "IsotropicPair";
    case CertificateKind::NonzeroCenter: return "NonzeroCenter";
    case CertificateKind::VanishingPfaffian: return "VanishingPfaffian";
  }
  return "OddDimension";
}

std::string_view to_string(SymplecticStatus s) {
  switch (s) {
    case SymplecticStatus::Symplectic: return "Symplectic";
    case SymplecticStatus::NotSymplecticCertified: return "NotSymplecticCertified";
    case SymplecticStatus::ProbablyNotSymplectic: return "ProbablyNotSymplectic";
  }
  return "ProbablyNotSymplectic";
}

std::string_view to_string(FrobeniusStatus s) {
  switch (s) {
    case FrobeniusStatus::Frobenius: return "Frobenius";
    case FrobeniusStatus::NotFrobeniusCertified: return "NotFrobeniusCertified";
    case FrobeniusStatus::ProbablyNotFrobenius: return "ProbablyNotFrobenius";
  }
  return "ProbablyNotFrobenius";
}

std::string_view to_string(AffineKind k) {
  switch (k) {
    case AffineKind::NonsingularDerivation: return "NonsingularDerivation";
    case AffineKind::SymplecticForm: return "SymplecticForm";
    case AffineKind::NonsingularCoadjointCocycle: return "NonsingularCoadjointCocycle";
    case AffineKind::NoneFound: return "NoneFound";
  }
  return "NoneFound";
}

std::pair<std::int64_t, std::uint64_t> sample_range(std::size_t n, std::size_t trials) {
  const std::uint64_t half = 2 * std::max<std::size_t>(n, 1) * std::max<std::size_t>(trials, 1);
  return {-static_cast<std::int64_t>(half), 2 * half};
}

namespace {

Vector sample_vector(CounterRng& rng, std::size_t len, std::pair<std::int64_t, std::uint64_t> range) {
  Vector v(len);
  for (auto& x : v) x = Scalar(static_cast<long>(rng.uniform(range.first, range.second)));
  return v;
}

Scalar failure_bound(std::size_t degree, std::uint64_t set_size, std::size_t trials) {
  Scalar base(static_cast<long>(degree), static_cast<long>(set_size));
  base.canonicalize();
  Scalar out(1);
  for (std::size_t t = 0; t < trials; ++t) out *= base;
  return out;
}

std::vector<Matrix> basis_matrices(const Subspace& s, const std::function<Matrix(const Vector&)>& to_matrix) {
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < s.dim(); ++b) out.push_back(to_matrix(s.basis_vector(b)));
  return out;
}

std::vector<Matrix> cocycle_forms(const LieAlgebra& g) {
  return basis_matrices(two_cocycles(g),
                        [&](const Vector& v) { return TwoForm::from_coordinates(g.dim(), v).matrix(); });
}

std::vector<Matrix> derivation_matrices(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  return basis_matrices(derivations(g), [&](const Vector& v) { return unflatten(v, n, n); });
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d.apply(g.bracket_basis(i, j));
      Vector rhs = g.bracket(d.column_vector(i), unit_vector(n, j));
      const Vector other = g.bracket(unit_vector(n, i), d.column_vector(j));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += other[k];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// First nonsingular element among `trials` random combinations of `basis`.
std::optional<std::pair<Matrix, Scalar>> nonsingular_sample(const std::vector<Matrix>& basis, std::uint64_t seed,
                                                            std::uint64_t fingerprint, std::uint64_t stream,
                                                            std::size_t n, std::size_t trials) {
  if (basis.empty()) return std::nullopt;
  const auto range = sample_range(n, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, fingerprint, stream, t);
    const Vector coeffs = sample_vector(rng, basis.size(), range);
    Matrix m = combine(coeffs, basis);
    Scalar d = det(m);
    if (sgn(d) != 0) return std::make_pair(std::move(m), std::move(d));
  }
  return std::nullopt;
}

bool vanishes_on_tails(const std::vector<Matrix>& forms, std::size_t n, std::size_t u_from, std::size_t v_from) {
  for (const auto& f : forms)
    for (std::size_t i = u_from; i < n; ++i)
      for (std::size_t j = v_from; j < n; ++j)
        if (sgn(f(i, j)) != 0) return false;
  return true;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> isotropic_tail_pair(const std::vector<Matrix>& forms,
                                                                        std::size_t n) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_sum = n;
  for (std::size_t u = 0; u < n; ++u) {
    // Smallest v_from that still works for this u; the region only grows as v_from drops.
    std::size_t v = n;
    while (v > 0 && vanishes_on_tails(forms, n, u, v - 1)) --v;
    const std::size_t sum = (n - u) + (n - v);
    if (sum > best_sum) {
      best_sum = sum;
      best = std::make_pair(u, v);
    }
  }
  return best;
}

// --- symplectic -------------------------------------------------------------

SymplecticVerdict symplectic_verdict(const LieAlgebra& g, std::uint64_t seed, std::size_t trials,
                                     const SymplecticOptions& options) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  SymplecticVerdict v;
  if (n % 2 == 1) {
    v.status = SymplecticStatus::NotSymplecticCertified;
    v.certificate = Certificate{CertificateKind::OddDimension, {}, 0};
    return v;
  }
  const std::vector<Matrix> forms = cocycle_forms(g);

  Matrix stacked(0, n);
  for (const auto& f : forms) stacked = vstack(stacked, f);
  const Subspace common = kernel(stacked);
  if (!common.is_zero()) {
    v.status = SymplecticStatus::NotSymplecticCertified;
    v.certificate = Certificate{CertificateKind::CommonKernelVector, common.basis_vector(0), 0};
    return v;
  }
  if (auto pair = isotropic_tail_pair(forms, n)) {
    v.status = SymplecticStatus::NotSymplecticCertified;
    Certificate c{CertificateKind::IsotropicPair, {}, 0};
    c.u_from = pair->first;
    c.v_from = pair->second;
    v.certificate = std::move(c);
    return v;
  }

  if (auto found = nonsingular_sample(forms, seed, g.fingerprint(), rng_stream::symplectic, n, trials)) {
    v.status = SymplecticStatus::Symplectic;
    v.witness = TwoForm(std::move(found->first));
    v.witness_det = std::move(found->second);
    return v;
  }

  const auto range = sample_range(n, trials);
  v.status = SymplecticStatus::ProbablyNotSymplectic;
  v.sampling = Sampling{seed, trials, range.second, failure_bound(n, range.second, trials)};
  if (!options.pfaffian) return v;

  const auto pf = generic_pfaffian(forms, options.pfaffian_budget);
  if (!pf) {
    v.note = "Pfaffian escalation skipped: about " +
             std::to_string(static_cast<long long>(pfaffian_monomial_estimate(forms.size(), n))) +
             " monomials exceeds the budget";
    return v;
  }
  if (pf->is_zero()) {
    v.status = SymplecticStatus::NotSymplecticCertified;
    v.certificate = Certificate{CertificateKind::VanishingPfaffian, {}, forms.size()};
    v.sampling.reset();
    return v;
  }
  // A nonzero polynomial of degree n/2 vanishes on at most a fraction
  // n/(2|S|) of the grid, so this loop ends after a few draws.
  const std::uint64_t size = 4 * static_cast<std::uint64_t>(n) + 8;
  for (std::uint64_t t = 0;; ++t) {
    CounterRng rng(seed, g.fingerprint(), rng_stream::pfaffian_point, t);
    const Vector point = sample_vector(rng, forms.size(), {-static_cast<std::int64_t>(size / 2), size});
    const Scalar value = pf->evaluate(point);
    if (sgn(value) == 0) continue;
    v.status = SymplecticStatus::Symplectic;
    v.witness = TwoForm(combine(point, forms));
    v.witness_det = value * value;
    v.sampling.reset();
    return v;
  }
}

bool verify(const LieAlgebra& g, const SymplecticVerdict& v) {
  const std::size_t n = g.dim();
  switch (v.status) {
    case SymplecticStatus::Symplectic:
      return v.witness && v.witness->dim() == n && is_two_cocycle(g, *v.witness) &&
             sgn(v.witness_det) != 0 && det(v.witness->matrix()) == v.witness_det;
    case SymplecticStatus::NotSymplecticCertified: {
      if (!v.certificate) return false;
      switch (v.certificate->kind) {
        case CertificateKind::OddDimension: return n % 2 == 1;
        case CertificateKind::CommonKernelVector: {
          if (v.certificate->vector.size() != n || is_zero(v.certificate->vector)) return false;
          for (const auto& f : cocycle_forms(g)) {
            if (!is_zero(f.apply(v.certificate->vector))) return false;
          }
          return true;
        }
        case CertificateKind::IsotropicPair: {
          const auto& c = *v.certificate;
          return c.u_from < n && c.v_from < n && (n - c.u_from) + (n - c.v_from) > n &&
                 vanishes_on_tails(cocycle_forms(g), n, c.u_from, c.v_from);
        }
        case CertificateKind::VanishingPfaffian: {
          const auto pf = generic_pfaffian(cocycle_forms(g), 1e300);
          return pf && pf->is_zero();
        }
        case CertificateKind::NonzeroCenter: return false;
      }
      return false;
    }
    case SymplecticStatus::ProbablyNotSymplectic: return !v.witness && v.sampling.has_value();
  }
  return false;
}

// --- Frobenius --------------------------------------------------------------

FrobeniusVerdict frobenius_verdict(const LieAlgebra& g, std::uint64_t seed, std::size_t trials) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  FrobeniusVerdict v;
  if (n % 2 == 1) {
    v.status = FrobeniusStatus::NotFrobeniusCertified;
    v.certificate = Certificate{CertificateKind::OddDimension, {}, 0};
    return v;
  }
  const Subspace z = center(g);
  if (!z.is_zero()) {
    v.status = FrobeniusStatus::NotFrobeniusCertified;
    v.certificate = Certificate{CertificateKind::NonzeroCenter, z.basis_vector(0), 0};
    return v;
  }
  const auto range = sample_range(n, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, g.fingerprint(), rng_stream::frobenius, t);
    Vector f = sample_vector(rng, n, range);
    TwoForm b = coboundary(g, f);
    Scalar d = det(b.matrix());
    if (sgn(d) != 0) {
      v.status = FrobeniusStatus::Frobenius;
      v.functional = std::move(f);
      v.witness = std::move(b);
      v.witness_det = std::move(d);
      return v;
    }
  }
  v.status = FrobeniusStatus::ProbablyNotFrobenius;
  v.sampling = Sampling{seed, trials, range.second, failure_bound(n, range.second, trials)};
  return v;
}

bool verify(const LieAlgebra& g, const FrobeniusVerdict& v) {
  const std::size_t n = g.dim();
  switch (v.status) {
    case FrobeniusStatus::Frobenius:
      return v.functional && v.witness && coboundary(g, *v.functional) == *v.witness && sgn(v.witness_det) != 0 &&
             det(v.witness->matrix()) == v.witness_det;
    case FrobeniusStatus::NotFrobeniusCertified:
      if (!v.certificate) return false;
      if (v.certificate->kind == CertificateKind::OddDimension) return n % 2 == 1;
      if (v.certificate->kind == CertificateKind::NonzeroCenter) {
        const Vector& z = v.certificate->vector;
        if (z.size() != n || is_zero(z)) return false;
        for (std::size_t j = 0; j < n; ++j) {
          if (!is_zero(g.bracket(z, unit_vector(n, j)))) return false;
        }
        return true;
      }
      return false;
    case FrobeniusStatus::ProbablyNotFrobenius: return !v.functional && v.sampling.has_value();
  }
  return false;
}

// --- CNLA -------------------------------------------------------------------

CnlaVerdict is_cnla(const LieAlgebra& g, std::uint64_t seed) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  const std::vector<Matrix> ders = derivation_matrices(g);

  CnlaVerdict v;
  v.flag.push_back(Subspace::zero(n));
  while (!v.flag.back().is_full()) {
    const Matrix ann = v.flag.back().annihilator();
    Matrix stacked(0, n);
    for (const auto& d : ders) stacked = vstack(stacked, ann * d);
    Subspace next = kernel(stacked);
    if (next == v.flag.back()) break;
    v.flag.push_back(std::move(next));
  }
  if (v.flag.back().is_full()) {
    v.is_cnla = true;
    return v;
  }

  // Engel: some derivation is not nilpotent, and such elements form a
  // nonempty Zariski-open subset of Der(g).
  v.flag.clear();
  for (std::size_t t = 0; t < 64; ++t) {
    CounterRng rng(seed, g.fingerprint(), rng_stream::cnla, t);
    const Vector coeffs = sample_vector(rng, ders.size(), {-8, 17});
    Matrix d = combine(coeffs, ders);
    if (!is_nilpotent_matrix(d)) {
      v.counterexample = std::move(d);
      return v;
    }
  }
  for (long radius = 1;; ++radius) {
    std::vector<long> c(ders.size(), -radius);
    while (true) {
      Vector coeffs(c.begin(), c.end());
      Matrix d = combine(coeffs, ders);
      if (!is_nilpotent_matrix(d)) {
        v.counterexample = std::move(d);
        return v;
      }
      std::size_t pos = 0;
      while (pos < c.size() && c[pos] == radius) c[pos++] = -radius;
      if (pos == c.size()) break;
      ++c[pos];
    }
  }
}

bool verify(const LieAlgebra& g, const CnlaVerdict& v) {
  const std::size_t n = g.dim();
  if (!v.is_cnla) return v.counterexample && is_derivation(g, *v.counterexample) && !is_nilpotent_matrix(*v.counterexample);
  if (v.flag.empty() || !v.flag.front().is_zero() || !v.flag.back().is_full()) return false;
  const std::vector<Matrix> ders = derivation_matrices(g);
  for (std::size_t i = 0; i + 1 < v.flag.size(); ++i) {
    if (v.flag[i + 1].dim() <= v.flag[i].dim() || !v.flag[i + 1].contains(v.flag[i])) return false;
    for (std::size_t b = 0; b < v.flag[i + 1].dim(); ++b) {
      const Vector x = v.flag[i + 1].basis_vector(b);
      for (const auto& d : ders) {
        if (!v.flag[i].contains(d.apply(x))) return false;
      }
    }
  }
  return n == v.flag.back().ambient_dim();
}

// --- affine -------------------------------------------------------------------

AffineWitness affine_witness(const LieAlgebra& g, std::uint64_t seed, std::size_t trials) {
  require_lie_algebra(g);
  const std::size_t n = g.dim();
  AffineWitness w;
  if (auto d = nonsingular_sample(derivation_matrices(g), seed, g.fingerprint(), rng_stream::affine_derivation, n,
                                  trials)) {
    w.kind = AffineKind::NonsingularDerivation;
    w.payload = std::move(d->first);
    w.note = "x.y = D^-1 [x, D y] is an affine structure";
    return w;
  }
  const SymplecticVerdict s = symplectic_verdict(g, seed, trials);
  if (s.status == SymplecticStatus::Symplectic) {
    w.kind = AffineKind::SymplecticForm;
    w.payload = s.witness->matrix();
    w.note = "symplectic Lie algebras are affine";
    return w;
  }
  const ModuleAction coad = coadjoint_module(g);
  const std::vector<Matrix> cocycles =
      basis_matrices(z1(g, coad), [&](const Vector& v) { return unflatten(v, n, n); });
  if (auto phi = nonsingular_sample(cocycles, seed, g.fingerprint(), rng_stream::affine_coadjoint, n, trials)) {
    w.kind = AffineKind::NonsingularCoadjointCocycle;
    w.payload = std::move(phi->first);
    w.note = "x.y = phi^-1(x . phi(y)) is an affine structure";
    return w;
  }
  w.kind = AffineKind::NoneFound;
  w.note = "no witness found; this does not show that the algebra is not affine";
  return w;
}

bool verify(const LieAlgebra& g, const AffineWitness& w) {
  const std::size_t n = g.dim();
  switch (w.kind) {
    case AffineKind::NonsingularDerivation: return is_derivation(g, w.payload) && sgn(det(w.payload)) != 0;
    case AffineKind::SymplecticForm:
      return w.payload.rows() == n && w.payload.is_skew_symmetric() && is_two_cocycle(g, TwoForm(w.payload)) &&
             sgn(det(w.payload)) != 0;
    case AffineKind::NonsingularCoadjointCocycle:
      return w.payload.rows() == n && w.payload.cols() == n && z1(g, coadjoint_module(g)).contains(flatten(w.payload)) &&
             sgn(det(w.payload)) != 0;
    case AffineKind::NoneFound: return true;
  }
  return false;
}

}  // namespace liecoh
