#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/cohomology/two_form.hpp"
#include "liecoh/exactlin/polynomial.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

namespace liecoh {

/// Index (k, s) of a filiform parameter alpha_{k,s}, 1-based.
struct AlphaIndex {
  int k = 0;
  int s = 0;
  auto operator<=>(const AlphaIndex&) const = default;
};

std::string to_string(const AlphaIndex& idx);

/// Grading weight s - 2k - 1 of alpha_{k,s} (the extra pair (n/2, n) has
/// weight -1). Every Jacobi coefficient is homogeneous in this weight.
int alpha_weight(const AlphaIndex& idx);

/// Index set for dimension n: {(k,s) : 2 <= k <= n/2, 2k+1 <= s <= n},
/// plus (n/2, n) for even n. Sorted by (k, s).
std::vector<AlphaIndex> index_set(int n);
bool in_index_set(int n, const AlphaIndex& idx);

/// Adapted-basis parameters of a filiform law. Missing keys are zero.
class FiliformParams {
 public:
  FiliformParams() = default;
  /// Throws RangeError for n < 4.
  explicit FiliformParams(int n);

  int n() const noexcept { return n_; }
  /// Throws BadIndex when (k, s) is outside the index set.
  FiliformParams& set(int k, int s, const Scalar& value);
  FiliformParams& set(const AlphaIndex& idx, const Scalar& value) { return set(idx.k, idx.s, value); }
  Scalar get(int k, int s) const;
  Scalar get(const AlphaIndex& idx) const { return get(idx.k, idx.s); }

  /// Nonzero entries only.
  const std::map<AlphaIndex, Scalar>& alpha() const noexcept { return alpha_; }

  friend bool operator==(const FiliformParams&, const FiliformParams&) = default;

 private:
  int n_ = 0;
  std::map<AlphaIndex, Scalar> alpha_;
};

/// [e_1, e_i] = e_{i+1} for 2 <= i < n and, for 2 <= i < j <= n,
///   [e_i, e_j] = sum_r sum_{l=0}^{(j-i-1)/2} (-1)^l C(j-i-l-1, l) alpha_{i+l, r-j+i+2l+1} e_r.
/// The Jacobi identity is not enforced here.
LieAlgebra build(const FiliformParams& p, std::string label = {});

/// Inverse of build on adapted presentations. Throws NotAdapted when
/// [e_1, e_i] = e_{i+1} fails and NotFiliformForm when the remaining
/// brackets do not come from any parameter set.
FiliformParams extract_params(const LieAlgebra& g);

/// omega_l(e_k ^ e_{2l+3-k}) = (-1)^k for 2 <= k <= l+1.
/// Throws RangeError unless 1 <= ell <= (n-1)/2.
TwoForm omega_ell(int n, int ell);

/// Effect of the adapted change of basis e_1 -> a e_1, e_2 -> b e_2,
/// e_i -> [f(e_1), f(e_{i-1})]: alpha_{k,s} -> alpha_{k,s} * b / a^{s-2k+1}.
FiliformParams rescale(const FiliformParams& p, const Scalar& a, const Scalar& b);
/// The same change of basis applied to the algebra itself.
LieAlgebra adapted_rescale(const LieAlgebra& g, const Scalar& a, const Scalar& b);

enum class ClassFamily {
  Table,           // A_{n,i}, n in {4,6,8,10}
  Series1,         // A_n^1
  Series2,         // A_n^2 without a known refinement
  Series2Refined,  // A_{n,i}^2, n = 14
  Series3,         // A_n^3
  Unclassified,
};

struct ClassLabel {
  ClassFamily family = ClassFamily::Unclassified;
  int n = 0;
  int index = 0;  // i of A_{n,i} or A_{n,i}^2

  /// "A_10_9", "A_12^1", "A_14_1^2", "Unclassified".
  std::string name() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Throws UnsupportedDim for n in {5, 7, 9, 11}.
ClassLabel classify(const FiliformParams& p);

/// The polynomial P_14 in alpha_{3,8}, alpha_{2,6}, alpha_{2,7}, alpha_{2,8}
/// (normalised alpha_{2,5} = 1) cutting A_{14,1}^2 out of A_14^2.
Scalar p14(const FiliformParams& p);

// --- Jacobi identity in the parameters -----------------------------------

/// Jacobi coefficients of build(p) as polynomials in the parameters.
/// Variable v stands for index_set(n)[v].
struct JacobiSystem {
  int n = 0;
  std::vector<AlphaIndex> variables;
  struct Equation {
    std::size_t i, j, k, l;  // 1-based, i < j < k
    Polynomial poly;
  };
  std::vector<Equation> equations;  // nonzero polynomials only

  const Polynomial* find(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  std::optional<std::uint16_t> variable_of(const AlphaIndex& idx) const;
};

/// Cached per dimension; safe to call concurrently.
const JacobiSystem& jacobi_system(int n);

struct LowTriple {
  Scalar a37;
  Scalar a49;
  Scalar a511;
  friend bool operator==(const LowTriple&, const LowTriple&) = default;
};

/// The three weight-zero equations for (alpha_{3,7}, alpha_{4,9}, alpha_{5,11})
/// under alpha_{2,5} = 1, as polynomials in variables 0, 1, 2.
std::vector<Polynomial> low_jacobi_equations();

/// Solves the weight-zero equations exactly. Requires n >= 12,
/// alpha_{2,5} = 1 and alpha_{n/2,n} = 0 for even n.
std::vector<LowTriple> jacobi_solve_low(const FiliformParams& p);

enum class Branch { A1, A2 };

/// Fills the dependent parameters so that the law satisfies the Jacobi
/// identity. alpha_{2,*} is kept, and so is every alpha_{3,s}, s >= 8, that
/// the system leaves free (all of them for n = 12; for n = 14 on branch A2
/// alpha_{3,9} is determined by the others). Requires even n >= 12,
/// alpha_{2,5} = 1, alpha_{n/2,n} = 0 and alpha_{3,7} = 0 (A1) or 1/10 (A2).
/// Throws NoSolution when no completion exists for the supplied values.
FiliformParams jacobi_closure(const FiliformParams& p, Branch branch);
FiliformParams jacobi_closure_12(const FiliformParams& p, Branch branch);

/// Chooses a value for a parameter that the linear solve left open.
using FreeChooser = std::function<Scalar(const AlphaIndex&)>;

/// Which unknowns a linear solve eliminates first: the ones with the lowest
/// or the highest (k, s).
enum class PivotPreference { LowIndex, HighIndex };

/// Triangular completion of a partial parameter assignment: repeatedly
/// substitutes the known values, solves every equation that became linear,
/// and asks `choose` for a value when no equation pins anything down.
/// Returns nullopt when the system becomes inconsistent.
std::optional<FiliformParams> complete_jacobi(int n, const std::map<AlphaIndex, Scalar>& fixed,
                                              const FreeChooser& choose,
                                              PivotPreference pivots = PivotPreference::LowIndex);

}  // namespace liecoh
