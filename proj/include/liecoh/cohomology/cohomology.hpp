#pragma once

#include <vector>

#include "liecoh/cohomology/module_action.hpp"
#include "liecoh/cohomology/two_form.hpp"

namespace liecoh {

/// omega([x1,x2] ^ x3) - omega([x1,x3] ^ x2) + omega([x2,x3] ^ x1) = 0 on all
/// basis triples.
bool is_two_cocycle(const LieAlgebra& g, const TwoForm& w);

/// (d f)(x ^ y) = f([x, y]) for f given by its values on the basis.
TwoForm coboundary(const LieAlgebra& g, std::span<const Scalar> f);

/// Z^2(g, k) in pair coordinates.
Subspace two_cocycles(const LieAlgebra& g);
/// B^2(g, k) in pair coordinates; its dimension is dim [g, g].
Subspace two_coboundaries(const LieAlgebra& g);

struct CohomologyResult {
  Subspace z;
  Subspace b;
  /// Canonical complement of B in Z: the RREF of Z reduced modulo B.
  std::vector<Vector> h_reps;

  std::size_t dim_z() const { return z.dim(); }
  std::size_t dim_b() const { return b.dim(); }
  std::size_t dim_h() const { return h_reps.size(); }
};

CohomologyResult h2(const LieAlgebra& g);

/// Complement of `sub` in `whole`, canonical in the pair (whole, sub).
std::vector<Vector> canonical_complement(const Subspace& whole, const Subspace& sub);

/// Z^1(g, M) as a subspace of dim_m x n matrices in row-major coordinates;
/// column c of a point is phi(e_c).
Subspace z1(const LieAlgebra& g, const ModuleAction& m);
/// B^1(g, M) = { x -> x . v : v in M } in the same coordinates.
Subspace b1(const LieAlgebra& g, const ModuleAction& m);

struct H1Dims {
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
};
H1Dims h1_dim(const LieAlgebra& g, const ModuleAction& m);

/// Der(g) = Z^1(g, g) with derivations as n x n matrices.
Subspace derivations(const LieAlgebra& g);
/// Row-major coordinates back to a rows x cols matrix.
Matrix unflatten(std::span<const Scalar> coords, std::size_t rows, std::size_t cols);
Vector flatten(const Matrix& m);

/// phi(x)(y) = omega(x ^ y) as a map g -> g*; matrix column i is phi(e_i).
Matrix form_to_coadjoint_cocycle(const TwoForm& w);

struct EmbeddingReport {
  std::size_t dim_h2 = 0;
  std::size_t dim_h1_coadjoint = 0;
  std::size_t dim_invariant_forms = 0;
  bool equality = false;
};

/// Compares H^2(g, k) with H^1(g, g*). Throws InvariantViolation if
/// dim H^2 > dim H^1(g, g*), or if they differ while g has no nonzero
/// invariant form.
EmbeddingReport embedding_check(const LieAlgebra& g);

}  // namespace liecoh
