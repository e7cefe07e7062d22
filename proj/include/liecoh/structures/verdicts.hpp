#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/cohomology/two_form.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

namespace liecoh {

inline constexpr std::size_t default_trials = 20;

struct Sampling {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t sample_set_size = 0;
  /// Schwartz-Zippel bound (degree / |S|)^trials on a false negative.
  Scalar failure_bound;
};

enum class CertificateKind { OddDimension, CommonKernelVector, IsotropicPair, NonzeroCenter, VanishingPfaffian };

struct Certificate {
  CertificateKind kind = CertificateKind::OddDimension;
  /// Kernel or center vector for CommonKernelVector / NonzeroCenter.
  Vector vector;
  /// Number of forms the vanishing Pfaffian was computed over.
  std::size_t forms = 0;
  /// IsotropicPair: every cocycle vanishes on U x V with U = span(e_{u_from+1}, ..., e_n)
  /// and V = span(e_{v_from+1}, ..., e_n) (0-based starts). When dim U + dim V > n
  /// each cocycle maps U into the annihilator of V, which is too small, so its
  /// kernel has dimension at least dim U + dim V - n.
  std::size_t u_from = 0;
  std::size_t v_from = 0;
};

/// Best tail pair (largest dim U + dim V, then largest U) on which every
/// form vanishes, if one beats n.
std::optional<std::pair<std::size_t, std::size_t>> isotropic_tail_pair(const std::vector<Matrix>& forms,
                                                                        std::size_t n);

std::string_view to_string(CertificateKind kind);

/// Integer sample set [-2 n t, 2 n t) for dimension n and t trials.
std::pair<std::int64_t, std::uint64_t> sample_range(std::size_t n, std::size_t trials);

// --- symplectic -----------------------------------------------------------

enum class SymplecticStatus { Symplectic, NotSymplecticCertified, ProbablyNotSymplectic };
std::string_view to_string(SymplecticStatus s);

struct SymplecticVerdict {
  SymplecticStatus status = SymplecticStatus::ProbablyNotSymplectic;
  std::optional<TwoForm> witness;
  Scalar witness_det;
  std::optional<Certificate> certificate;
  std::optional<Sampling> sampling;
  /// Set when the Pfaffian escalation was requested but skipped.
  std::string note;
};

struct SymplecticOptions {
  bool pfaffian = false;
  /// Largest Pfaffian monomial estimate attempted.
  double pfaffian_budget = 10000;
};

SymplecticVerdict symplectic_verdict(const LieAlgebra& g, std::uint64_t seed, std::size_t trials = default_trials,
                                     const SymplecticOptions& options = {});

/// Exact re-verification of a verdict against g; false means the verdict
/// is not backed by its witness or certificate.
bool verify(const LieAlgebra& g, const SymplecticVerdict& v);

// --- Frobenius ------------------------------------------------------------

enum class FrobeniusStatus { Frobenius, NotFrobeniusCertified, ProbablyNotFrobenius };
std::string_view to_string(FrobeniusStatus s);

struct FrobeniusVerdict {
  FrobeniusStatus status = FrobeniusStatus::ProbablyNotFrobenius;
  /// f with B(x, y) = f([x, y]) nondegenerate.
  std::optional<Vector> functional;
  std::optional<TwoForm> witness;
  Scalar witness_det;
  std::optional<Certificate> certificate;
  std::optional<Sampling> sampling;
};

FrobeniusVerdict frobenius_verdict(const LieAlgebra& g, std::uint64_t seed, std::size_t trials = default_trials);
bool verify(const LieAlgebra& g, const FrobeniusVerdict& v);

// --- characteristic nilpotency --------------------------------------------

struct CnlaVerdict {
  bool is_cnla = false;
  /// 0 = V_0 < V_1 < ... = g with D V_{i+1} in V_i for every derivation D.
  std::vector<Subspace> flag;
  std::optional<Matrix> counterexample;
};

CnlaVerdict is_cnla(const LieAlgebra& g, std::uint64_t seed = 0);
bool verify(const LieAlgebra& g, const CnlaVerdict& v);

// --- affine structures ----------------------------------------------------

enum class AffineKind { NonsingularDerivation, SymplecticForm, NonsingularCoadjointCocycle, NoneFound };
std::string_view to_string(AffineKind k);

struct AffineWitness {
  AffineKind kind = AffineKind::NoneFound;
  Matrix payload;
  std::string note;
};

AffineWitness affine_witness(const LieAlgebra& g, std::uint64_t seed, std::size_t trials = default_trials);
bool verify(const LieAlgebra& g, const AffineWitness& w);

}  // namespace liecoh
