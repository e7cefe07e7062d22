#include <doctest.h>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "support.hpp"

using namespace liecoh;

TEST_CASE("index sets") {
  CHECK(index_set(4) == std::vector<AlphaIndex>{{2, 4}});
  CHECK(index_set(6) == std::vector<AlphaIndex>{{2, 5}, {2, 6}, {3, 6}});
  CHECK(index_set(12).size() == 21);
  CHECK_THROWS_AS(FiliformParams(3), Error);
  CHECK_THROWS_AS(FiliformParams(8).set(3, 6, 1), Error);
}

TEST_CASE("bracket formula by hand for n = 6, alpha_{2,5} = 1") {
  FiliformParams p(6);
  p.set(2, 5, 1);
  const LieAlgebra g = build(p);
  // [e2,e3] = a25 e5 + a26 e6, [e2,e4] = a25 e6, [e3,e4] = a36 e6
  CHECK(g.bracket_basis(1, 2) == unit_vector(6, 4));
  CHECK(g.bracket_basis(1, 3) == unit_vector(6, 5));
  CHECK(is_zero(g.bracket_basis(2, 3)));
  CHECK(g.bracket_basis(0, 4) == unit_vector(6, 5));
  CHECK(is_lie_algebra(g));
  CHECK(g == catalog("mu6_2"));
}

TEST_CASE("build of mu0 has only the [e1, ei] brackets") {
  const LieAlgebra g = build(FiliformParams(9));
  CHECK(g.terms().size() == 7);
  for (const auto& t : g.terms()) CHECK(t.i == 0);
}

TEST_CASE("extract_params round trip") {
  gen::Rng r(8);
  for (int n : {6, 8, 10}) {
    for (int t = 0; t < 5; ++t) {
      const auto p = gen::filiform(r, n);
      if (!p) continue;
      CHECK(extract_params(build(*p)) == *p);
    }
  }
  CHECK(extract_params(catalog("n4")) == FiliformParams(4));
  // swap e2 and e3: no longer adapted
  Matrix perm(4, 4);
  perm(0, 0) = perm(1, 2) = perm(2, 1) = perm(3, 3) = 1;
  CHECK_THROWS_AS(extract_params(change_basis(catalog("n4"), perm)), Error);
}

TEST_CASE("omega_ell") {
  const TwoForm w1 = omega_ell(6, 1);
  CHECK(w1(1, 2) == 1);
  CHECK(w1.coordinates() == TwoForm::zero(6).set(1, 2, 1).coordinates());
  const TwoForm w2 = omega_ell(6, 2);
  CHECK(w2(1, 4) == 1);
  CHECK(w2(2, 3) == -1);
  CHECK_THROWS_AS(omega_ell(6, 3), Error);
  for (int n : {7, 9, 12}) {
    for (int l = 1; l < (n - 1) / 2; ++l) {
      const Vector row = omega_ell(n, l).matrix().row_vector(static_cast<std::size_t>(n - 1));
      CHECK(is_zero(row));
      CHECK(sgn(det(omega_ell(n, l).matrix())) == 0);
    }
  }
}

TEST_CASE("classification predicates") {
  CHECK(classify(FiliformParams(10)).name() == "A_10_9");
  CHECK(classify(FiliformParams(8).set(2, 5, 1)).name() == "A_8_2");
  CHECK(classify(FiliformParams(8).set(2, 5, 1).set(3, 7, -2)).name() == "A_8_3");
  CHECK(classify(FiliformParams(8)).name() == "A_8_4");
  CHECK(classify(FiliformParams(6).set(3, 6, 1)).name() == "A_6_1");
  CHECK(classify(FiliformParams(12).set(2, 5, 1).set(3, 7, Scalar(1, 10))).name() == "A_12^2");
  CHECK(classify(FiliformParams(12).set(2, 5, 1)).name() == "A_12^1");
  CHECK(classify(FiliformParams(12).set(2, 5, 1).set(6, 12, 1)).name() == "A_12^3");
  CHECK_THROWS_AS(classify(FiliformParams(9)), Error);
}

TEST_CASE("rescaling keeps the class") {
  gen::Rng r(41);
  for (int n : {8, 10}) {
    for (int t = 0; t < 6; ++t) {
      const auto p = gen::filiform(r, n);
      if (!p) continue;
      Scalar a = r.rational(4), b = r.rational(4);
      if (sgn(a) == 0) a = 3;
      if (sgn(b) == 0) b = -2;
      const FiliformParams q = rescale(*p, a, b);
      CHECK(classify(q) == classify(*p));
      CHECK(extract_params(adapted_rescale(build(*p), a, b)) == q);
    }
  }
}

TEST_CASE("weight-zero Jacobi equations") {
  const auto eqs = low_jacobi_equations();
  REQUIRE(eqs.size() == 3);
  for (const auto& t : {LowTriple{0, 0, 0}, LowTriple{Scalar(1, 10), Scalar(1, 70), Scalar(1, 420)}}) {
    const std::vector<Scalar> v{t.a37, t.a49, t.a511};
    for (const auto& e : eqs) CHECK(e.evaluate(v) == 0);
  }
  FiliformParams p(12);
  p.set(2, 5, 1).set(2, 6, 3).set(3, 9, -1);
  const auto sols = jacobi_solve_low(p);
  CHECK(sols == std::vector<LowTriple>{{0, 0, 0}, {Scalar(1, 10), Scalar(1, 70), Scalar(1, 420)}});
  CHECK_THROWS_AS(jacobi_solve_low(FiliformParams(12)), Error);
}

TEST_CASE("Jacobi system matches the numeric check") {
  gen::Rng r(5);
  for (int n : {7, 8, 9}) {
    const auto& sys = jacobi_system(n);
    for (int t = 0; t < 3; ++t) {
      FiliformParams p(n);
      std::vector<Scalar> values(sys.variables.size());
      for (std::size_t v = 0; v < values.size(); ++v) {
        values[v] = r.between(-3, 3);
        p.set(sys.variables[v], values[v]);
      }
      std::size_t nonzero = 0;
      for (const auto& e : sys.equations) nonzero += sgn(e.poly.evaluate(values)) != 0;
      CHECK(nonzero == jacobi_check(build(p)).size());
    }
  }
}

TEST_CASE("closure for n = 12") {
  FiliformParams zero(12);
  zero.set(2, 5, 1);
  const FiliformParams c0 = jacobi_closure_12(zero, Branch::A1);
  CHECK(c0 == zero);

  FiliformParams p(12);
  p.set(2, 5, 1).set(3, 8, 1);
  const FiliformParams c = jacobi_closure_12(p, Branch::A1);
  CHECK(c.get(4, 11) == 2);
  CHECK(c.get(4, 12) == -3);
  CHECK(is_lie_algebra(build(c)));

  p.set(2, 6, 2);
  CHECK(jacobi_closure_12(p, Branch::A1).get(4, 12) == -9);

  FiliformParams q(12);
  q.set(2, 5, 1).set(3, 7, Scalar(1, 10));
  const FiliformParams c2 = jacobi_closure_12(q, Branch::A2);
  CHECK(c2.get(4, 9) == Scalar(1, 70));
  CHECK(c2.get(5, 11) == Scalar(1, 420));
  CHECK(is_lie_algebra(build(c2)));
  CHECK(classify(c2).name() == "A_12^2");
}

TEST_CASE("closure keeps every free parameter it was given") {
  gen::Rng r(12);
  for (int t = 0; t < 6; ++t) {
    FiliformParams p(12);
    p.set(2, 5, 1);
    for (int s = 6; s <= 12; ++s) p.set(2, s, r.between(-3, 3));
    for (int s = 8; s <= 12; ++s) p.set(3, s, r.between(-3, 3));
    const FiliformParams c = jacobi_closure(p, Branch::A1);
    CHECK(is_lie_algebra(build(c)));
    for (const auto& [idx, v] : p.alpha()) CHECK(c.get(idx) == v);
    CHECK(c.get(4, 11) == 2 * p.get(3, 8) * p.get(3, 8));
    CHECK(c.get(4, 12) == -(3 * c.get(4, 11) * (p.get(2, 6) + p.get(3, 8)) - 9 * p.get(3, 9) * p.get(3, 8)) / 2);
  }
}

TEST_CASE("P14 splits A_14^2 by dim H2") {
  gen::Rng r(14);
  for (int t = 0; t < 2; ++t) {
    FiliformParams p(14);
    p.set(2, 5, 1).set(3, 7, Scalar(1, 10));
    p.set(3, 8, r.between(1, 3)).set(2, 6, r.between(-2, 2)).set(2, 7, r.between(-2, 2)).set(2, 8, r.between(-2, 2));
    p.set(3, 10, p14(p));
    const FiliformParams on = jacobi_closure(p, Branch::A2);
    CHECK(classify(on).name() == "A_14_1^2");
    CHECK(oracle::dim_h2(build(on)) == 3);
    p.set(3, 10, p14(p) + 1);
    const FiliformParams off = jacobi_closure(p, Branch::A2);
    CHECK(classify(off).name() == "A_14_2^2");
    CHECK(oracle::dim_h2(build(off)) == 2);
  }
}
