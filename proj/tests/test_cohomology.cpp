#include <doctest.h>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "support.hpp"

using namespace liecoh;

namespace {

oracle::Rows rows_of(const TwoForm& w) {
  const std::size_t n = w.dim();
  oracle::Rows out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = w(i, j);
  return out;
}

}  // namespace

TEST_CASE("pair coordinates") {
  CHECK(pair_count(5) == 10);
  std::size_t expect = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(pair_index(5, i, j) == expect++);
  CHECK_THROWS_AS(TwoForm(Matrix{{0, 1}, {1, 0}}), Error);
}

TEST_CASE("cocycles and coboundaries of small algebras") {
  CHECK(two_cocycles(catalog("abelian", {{"n", 4}})).dim() == 6);
  CHECK(two_coboundaries(catalog("abelian", {{"n", 4}})).is_zero());
  const LieAlgebra n4 = catalog("n4");
  CHECK(two_cocycles(n4).dim() == 4);
  CHECK(two_coboundaries(n4).dim() == 2);
  CHECK(h2(n4).dim_h() == 2);
  CHECK(h2(catalog("contre6")).dim_h() == 2);
  CHECK(h2(catalog("mu0", {{"n", 10}})).dim_h() == 5);
}

TEST_CASE("Z2 of r3lam + k is the displayed family") {
  // Forms with entries (alpha, beta, gamma) on row e1 and delta = omega(e2, e3),
  // subject to (lambda + 1) delta = 0.
  for (const Scalar& lambda : {Scalar(-1), Scalar(1), Scalar(1, 2)}) {
    const LieAlgebra g = catalog("r3lam_c", {{"lambda", lambda}});
    const Subspace z = two_cocycles(g);
    const bool minus_one = lambda == -1;
    CHECK(z.dim() == (minus_one ? 4u : 3u));
    std::vector<Vector> expected;
    for (std::size_t j = 1; j < 4; ++j) expected.push_back(TwoForm::zero(4).set(0, j, 1).coordinates());
    if (minus_one) expected.push_back(TwoForm::zero(4).set(1, 2, 1).coordinates());
    CHECK(z == Subspace::span(expected, 6));
  }
}

TEST_CASE("library H2 agrees with the oracle") {
  for (const auto& e : catalog_entries()) {
    std::map<std::string, Scalar> params;
    for (const auto& name : e.params) params[name] = name == "n" ? 7 : -2;
    const LieAlgebra g = catalog(e.name, params);
    const auto r = h2(g);
    CHECK_MESSAGE(r.dim_z() == oracle::dim_z2(g), e.name);
    CHECK_MESSAGE(r.dim_b() == oracle::dim_derived(g), e.name);
  }
  gen::Rng rng(77);
  for (int n : {6, 8, 10}) {
    for (int t = 0; t < 4; ++t) {
      const auto p = gen::filiform(rng, n);
      if (!p) continue;
      const LieAlgebra g = build(*p);
      CHECK(h2(g).dim_h() == oracle::dim_h2(g));
    }
  }
}

TEST_CASE("H2 representatives are cocycles independent modulo B2") {
  const LieAlgebra g = catalog("mu0", {{"n", 8}});
  const auto r = h2(g);
  Subspace acc = r.b;
  for (const auto& v : r.h_reps) {
    CHECK(oracle::is_cocycle(g, rows_of(TwoForm::from_coordinates(8, v))));
    CHECK_FALSE(acc.contains(v));
    acc = sum(acc, Subspace::span({v}, acc.ambient_dim()));
  }
  CHECK(acc == r.z);
  CHECK(canonical_complement(r.z, r.b) == r.h_reps);
}

TEST_CASE("printed n = 8 cocycles") {
  // The e3^e4 entry of the printed omega (A_{8,2}) and beta (A_{8,4}) is
  // alpha_{3,7}; the cocycle identity needs alpha_{2,7} there.
  gen::Rng r(88);
  const auto omega = [](const FiliformParams& p, const Scalar& e34) {
    const Scalar a25 = p.get(2, 5), a37 = p.get(3, 7), den = 2 * a25 + a37;
    TwoForm w = TwoForm::zero(8);
    w.set(0, 7, 1);
    w.set(1, 3, p.get(2, 8));
    w.set(1, 5, p.get(2, 6) - 2 * p.get(3, 8));
    w.set(1, 6, a25 * (2 * a25 - 5 * a37) / den);
    w.set(2, 3, e34);
    w.set(2, 4, p.get(3, 8));
    w.set(2, 5, 2 * a37 * (a25 - a37) / den);
    w.set(3, 4, 3 * a37 * a37 / den);
    return w;
  };
  int tested = 0;
  for (int t = 0; t < 40 && tested < 4; ++t) {
    const auto p = complete_jacobi(8, {{{4, 8}, 0}}, [&](const AlphaIndex&) { return Scalar(r.between(-3, 3)); });
    if (!p || classify(*p).name() != "A_8_2" || sgn(p->get(3, 7)) == 0 || p->get(2, 7) == p->get(3, 7)) continue;
    ++tested;
    const LieAlgebra g = build(*p);
    CHECK(oracle::is_cocycle(g, rows_of(omega(*p, p->get(2, 7)))));
    CHECK_FALSE(oracle::is_cocycle(g, rows_of(omega(*p, p->get(3, 7)))));
  }
  CHECK(tested > 0);

  const auto beta = [](const FiliformParams& p, const Scalar& e34) {
    TwoForm w = TwoForm::zero(8);
    w.set(0, 7, 1);
    w.set(1, 3, p.get(2, 8));
    w.set(1, 5, p.get(2, 6) - 2 * p.get(3, 8));
    w.set(1, 6, 1);
    w.set(2, 3, e34);
    w.set(2, 4, p.get(3, 8));
    w.set(2, 5, -1);
    w.set(3, 4, 1);
    return w;
  };
  const FiliformParams p = extract_params(catalog("mu8_9", {{"alpha", 2}}));
  const LieAlgebra g = build(p);
  CHECK(oracle::is_cocycle(g, rows_of(beta(p, p.get(2, 7)))));
  CHECK_FALSE(oracle::is_cocycle(g, rows_of(beta(p, p.get(3, 7)))));
  CHECK(sgn(det(beta(p, p.get(2, 7)).matrix())) != 0);
}

TEST_CASE("first cohomology") {
  const LieAlgebra n4 = catalog("n4");
  const auto triv = h1_dim(n4, trivial_module(n4));
  CHECK(triv.dim_h == 2);
  CHECK(h1_dim(n4, coadjoint_module(n4)).dim_h >= 2);
  const LieAlgebra ab = catalog("abelian", {{"n", 3}});
  const auto co = h1_dim(ab, coadjoint_module(ab));
  CHECK(co.dim_z == 9);
  CHECK(co.dim_b == 0);
  CHECK(derivations(ab).dim() == 9);

  // The weights (1, 2, 3, 4, 5, 7) clash on [e1, e5] = e6 versus [e2, e5] = -e6;
  // the diagonal derivations of contre6 are multiples of (1, 1, 2, 3, 4, 5).
  const Subspace der = derivations(catalog("contre6"));
  CHECK_FALSE(der.contains(flatten(Matrix::diagonal({1, 2, 3, 4, 5, 7}))));
  CHECK(der.contains(flatten(Matrix::diagonal({1, 1, 2, 3, 4, 5}))));
}

TEST_CASE("module actions are checked") {
  const LieAlgebra n4 = catalog("n4");
  for (const auto& m : {trivial_module(n4), adjoint_module(n4), coadjoint_module(n4)}) CHECK(m.dim_g() == 4);
  const ModuleAction ad = adjoint_module(n4), coad = coadjoint_module(n4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(coad.rho(i) + ad.rho(i).transpose() == Matrix(4, 4));
  std::vector<Matrix> bad(4, Matrix(2, 2));
  bad[0] = Matrix{{1, 0}, {0, 0}};
  bad[1] = Matrix{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(ModuleAction(n4, bad), Error);
  CHECK_THROWS_AS(ModuleAction(n4, std::vector<Matrix>(3, Matrix(2, 2))), Error);
}

TEST_CASE("H2 embeds into H1(g, g*)") {
  CHECK(embedding_check(catalog("n4")).dim_h1_coadjoint >= 2);
  const auto ab = embedding_check(catalog("abelian", {{"n", 2}}));
  CHECK(ab.dim_h2 == 1);
  CHECK(ab.dim_h1_coadjoint == 4);
  CHECK(ab.dim_invariant_forms == 4);
  CHECK_FALSE(ab.equality);
  const auto r2 = embedding_check(catalog("r2"));
  if (r2.dim_invariant_forms == 0) CHECK(r2.equality);
  CHECK(embedding_check(catalog("n3")).dim_invariant_forms > 0);
}
