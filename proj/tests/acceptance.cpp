// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// All checks are exact; there are no tolerances.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/io/json_io.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "liecoh/report/class_tables.hpp"
#include "liecoh/structures/verdicts.hpp"
#include "support.hpp"

using namespace liecoh;

namespace {

int failures = 0;

void line(int id, const char* name, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::printf("%s %d %s: %s [%.2fs]\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), secs);
  std::fflush(stdout);
}

SymplecticOptions with_pfaffian() {
  SymplecticOptions o;
  o.pfaffian = true;
  return o;
}

bool symplectic(const LieAlgebra& g, std::string* status = nullptr) {
  const auto v = symplectic_verdict(g, 0, default_trials, with_pfaffian());
  if (!verify(g, v)) throw Error(ErrorKind::InvariantViolation, "verdict does not re-verify");
  if (status) *status = std::string(to_string(v.status));
  return v.status == SymplecticStatus::Symplectic;
}

// Certified (or sampled) negative, never Symplectic.
bool negative(const LieAlgebra& g) { return !symplectic(g); }

std::string bools(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

FiliformParams zero_choice(int n, const std::map<AlphaIndex, Scalar>& fixed) {
  const auto p = complete_jacobi(n, fixed, [](const AlphaIndex&) { return Scalar(0); });
  if (!p) throw Error(ErrorKind::NoSolution, "no completion for n = " + std::to_string(n));
  return *p;
}

std::vector<FiliformParams> random_points(int n, std::size_t count, std::uint64_t seed) {
  gen::Rng r(seed);
  std::vector<FiliformParams> out;
  for (int attempt = 0; attempt < 4000 && out.size() < count; ++attempt)
    if (const auto p = gen::filiform(r, n)) out.push_back(*p);
  return out;
}

}  // namespace

int main() {
  line(1, "n4 cohomology and verdicts", [] {
    const LieAlgebra g = catalog("n4");
    const std::size_t d = h2(g).dim_h();
    const bool sym = symplectic(g);
    const auto f = frobenius_verdict(g, 0);
    const bool frob = f.status == FrobeniusStatus::Frobenius;
    const auto c = is_cnla(g);
    std::ostringstream o;
    o << "dim H2 = " << d << " (oracle " << oracle::dim_h2(g) << "), symplectic " << sym << ", frobenius "
      << frob << ", cnla " << c.is_cnla;
    return std::pair{d == 2 && oracle::dim_h2(g) == 2 && sym && !frob && verify(g, f) && !c.is_cnla && verify(g, c),
                     o.str()};
  });

  line(2, "contre6", [] {
    const LieAlgebra g = catalog("contre6");
    const std::size_t d = h2(g).dim_h();
    const auto v = symplectic_verdict(g, 0);
    const bool cert = v.status == SymplecticStatus::NotSymplecticCertified && v.certificate &&
                      v.certificate->kind == CertificateKind::CommonKernelVector &&
                      Subspace::span({v.certificate->vector}, 6) == Subspace::span({unit_vector(6, 5)}, 6) &&
                      verify(g, v);
    const auto a = affine_witness(g, 0);
    const bool aff = a.kind == AffineKind::NonsingularDerivation && verify(g, a);
    std::ostringstream o;
    o << "dim H2 = " << d << ", kernel vector along e6 " << cert << ", affine " << to_string(a.kind);
    return std::pair{d == 2 && cert && aff, o.str()};
  });

  line(3, "four-dimensional quasi-Frobenius table", [] {
    std::vector<LieAlgebra> yes{catalog("abelian", {{"n", 4}}), catalog("n3_c"), catalog("r2_c2"), catalog("r3m1_c"),
                                catalog("r2_r2"), catalog("n4"), catalog("g1m1"), catalog("g6")};
    for (const Scalar a : {Scalar(1), Scalar(-2)}) {
      yes.push_back(catalog("g2", {{"alpha", a}}));
      yes.push_back(catalog("g8", {{"alpha", a}}));
    }
    std::vector<bool> got;
    bool ok = true;
    for (const auto& g : yes) {
      got.push_back(symplectic(g));
      ok = ok && got.back();
    }
    const bool sl2 = negative(catalog("sl2_c"));
    std::vector<bool> lam;
    for (const Scalar l : {Scalar(-1), Scalar(1), Scalar(1, 2)}) lam.push_back(symplectic(catalog("r3lam_c", {{"lambda", l}})));
    ok = ok && sl2 && lam == std::vector<bool>{true, false, false};
    return std::pair{ok, "table " + bools(got) + ", sl2+k negative " + std::to_string(sl2) +
                             ", r3lam+k at -1,1,1/2: " + bools(lam)};
  });

  line(4, "filiform dim H2 for n = 6, 8, 10", [] {
    struct Point {
      const char* label;
      FiliformParams p;
      std::size_t expected;
    };
    std::vector<Point> pts{
        {"A_6_1", zero_choice(6, {{{3, 6}, 1}}), 2},
        {"A_6_2", extract_params(catalog("mu6_2")), 3},
        {"A_8_1", zero_choice(8, {{{4, 8}, 1}}), 3},
        {"A_8_2", extract_params(catalog("mu8_6", {{"alpha", 2}})), 3},
        {"A_8_3", zero_choice(8, {{{2, 5}, 1}, {{3, 7}, -2}}), 3},
        {"A_8_4", FiliformParams(8), 4},
        {"A_10_1", zero_choice(10, {{{5, 10}, 1}, {{2, 5}, 1}, {{3, 7}, 1}}), 3},
        {"A_10_2", zero_choice(10, {{{5, 10}, 1}}), 4},
        {"A_10_3", zero_choice(10, {{{2, 5}, 1}, {{3, 7}, 2}}), 3},
        {"A_10_4", zero_choice(10, {{{2, 5}, 1}, {{3, 7}, 1}}), 3},
        {"A_10_5", zero_choice(10, {{{4, 9}, 1}, {{2, 6}, 1}}), 3},
        {"A_10_6", zero_choice(10, {{{4, 9}, 1}}), 4},
        {"A_10_7", zero_choice(10, {{{2, 7}, 1}}), 4},
        {"A_10_8", zero_choice(10, {{{4, 10}, 1}, {{2, 6}, 1}}), 4},
        {"A_10_9", FiliformParams(10), 5},
    };
    bool ok = true;
    std::string got;
    for (const auto& pt : pts) {
      const LieAlgebra g = build(pt.p);
      const std::size_t d = h2(g).dim_h();
      const bool row = is_lie_algebra(g) && classify(pt.p).name() == pt.label && d == pt.expected &&
                       oracle::dim_h2(g) == d;
      ok = ok && row;
      got += std::string(pt.label) + "=" + std::to_string(d) + (row ? "" : "!") + " ";
    }
    return std::pair{ok, got + "(all n = 10 classes sampled)"};
  });

  line(5, "A_8_2 criterion on mu8_6(alpha)", [] {
    std::vector<bool> neg, pos;
    for (const Scalar a : {Scalar(-1, 2), Scalar(0), Scalar(1), Scalar(5, 2)})
      neg.push_back(negative(catalog("mu8_6", {{"alpha", a}})));
    for (const Scalar a : {Scalar(2), Scalar(-1)}) pos.push_back(symplectic(catalog("mu8_6", {{"alpha", a}})));
    const bool ok = neg == std::vector<bool>(4, true) && pos == std::vector<bool>(2, true);
    return std::pair{ok, "negative at -1/2,0,1,5/2: " + bools(neg) + ", positive at 2,-1: " + bools(pos)};
  });

  line(6, "A_10_3 and A_10_7 criteria", [] {
    const FiliformParams root = zero_choice(10, {{{2, 5}, 7}, {{3, 7}, 4}});
    const FiliformParams off = zero_choice(10, {{{2, 5}, 1}, {{3, 7}, 2}});
    const FiliformParams f0 = zero_choice(10, {{{2, 7}, 1}, {{3, 8}, 1}, {{4, 10}, Scalar(4, 3)}});
    const FiliformParams f1 = zero_choice(10, {{{2, 7}, 1}, {{3, 8}, 1}, {{4, 10}, 1}});
    const auto f = [](const FiliformParams& p) -> Scalar {
      return 3 * p.get(4, 10) * (p.get(2, 6) + p.get(3, 8)) - 4 * p.get(3, 8) * p.get(3, 8);
    };
    const bool labels = classify(root).name() == "A_10_3" && classify(off).name() == "A_10_3" &&
                        classify(f0).name() == "A_10_7" && classify(f1).name() == "A_10_7";
    const bool factor = 7 * root.get(3, 7) - 4 * root.get(2, 5) == 0 && 7 * off.get(3, 7) - 4 * off.get(2, 5) != 0;
    const bool fvals = f(f0) == 0 && f(f1) != 0;
    const bool a = negative(build(root)), b = symplectic(build(off)), c = negative(build(f0)),
               d = symplectic(build(f1));
    std::ostringstream o;
    o << "A_10_3 root(7,4) negative " << a << ", (1,2) symplectic " << b << "; A_10_7 f=0 negative " << c
      << ", f!=0 symplectic " << d;
    return std::pair{labels && factor && fvals && a && b && c && d, o.str()};
  });

  line(7, "Jacobi solving for n = 12", [] {
    FiliformParams p(12);
    p.set(2, 5, 1);
    const auto sols = jacobi_solve_low(p);
    const bool low = sols == std::vector<LowTriple>{{0, 0, 0}, {Scalar(1, 10), Scalar(1, 70), Scalar(1, 420)}};
    p.set(3, 8, 1);
    const FiliformParams c = jacobi_closure_12(p, Branch::A1);
    const bool closure = c.get(4, 11) == 2 && jacobi_check(build(c)).empty();
    return std::pair{low && closure, "low solutions " + std::to_string(sols.size()) + ", alpha_{4,11} = " +
                                         to_string(c.get(4, 11))};
  });

  line(8, "n = 12 and n = 14 series", [] {
    bool ok = true;
    std::ostringstream o;
    for (int n : {12, 14}) {
      FiliformParams p(n);
      p.set(2, 5, 1).set(3, 8, 1);
      const LieAlgebra g = build(jacobi_closure(p, Branch::A1));
      const auto v = symplectic_verdict(g, 0);
      const bool certified = v.status == SymplecticStatus::NotSymplecticCertified && verify(g, v);
      // The displayed kernel vector e_{n-2} + ((n-6) a38 - a26) e_{n-1} must be
      // annihilated by every cocycle.
      Vector k = unit_vector(n, n - 3);
      k[n - 2] = (n - 6) * p.get(3, 8) - p.get(2, 6);
      const Subspace z = two_cocycles(g);
      std::size_t killed = 0;
      for (std::size_t b = 0; b < z.dim(); ++b)
        killed += is_zero(TwoForm::from_coordinates(n, z.basis_vector(b)).matrix().apply(k));
      ok = ok && certified && killed == z.dim();
      o << "A_" << n << "^1 " << to_string(v.status) << "("
        << (v.certificate ? to_string(v.certificate->kind) : "none") << "), displayed vector killed by " << killed
        << "/" << z.dim() << " Z2 basis forms; ";
    }
    {
      FiliformParams p(12);
      p.set(2, 5, 1).set(3, 7, Scalar(1, 10)).set(3, 8, 1);
      const LieAlgebra g = build(jacobi_closure(p, Branch::A2));
      const bool s = symplectic(g), c = is_cnla(g).is_cnla;
      ok = ok && 200 * p.get(3, 8) - 27 * p.get(2, 6) != 0 && s && c;
      o << "A_12^2 symplectic " << s << " cnla " << c << "; ";
    }
    for (int shift : {0, 1}) {
      FiliformParams p(14);
      p.set(2, 5, 1).set(3, 7, Scalar(1, 10)).set(3, 8, 1);
      p.set(3, 10, p14(p) + shift);
      const LieAlgebra g = build(jacobi_closure(p, Branch::A2));
      const std::size_t d = h2(g).dim_h();
      const bool s = symplectic(g);
      ok = ok && (shift == 0 ? d == 3 && s : d == 2 && !s);
      o << (shift == 0 ? "on P14: " : "off P14: ") << "dim H2 " << d << " symplectic " << s << (shift ? "" : "; ");
    }
    return std::pair{ok, o.str()};
  });

  line(9, "CNLA spot checks", [] {
    const auto a = is_cnla(catalog("mu8_15")), b = is_cnla(catalog("mu8_5", {{"alpha", 2}}));
    const LieAlgebra mu = catalog("mu8_19");
    const auto c = is_cnla(mu);
    const bool witness = !c.is_cnla && c.counterexample && !is_nilpotent_matrix(*c.counterexample) &&
                         derivations(mu).contains(flatten(*c.counterexample));
    std::ostringstream o;
    o << "mu8_15 " << a.is_cnla << ", mu8_5(2) " << b.is_cnla << ", mu8_19 " << c.is_cnla
      << " with non-nilpotent derivation " << witness << ", mu8_19 == mu0(8) "
      << (mu == catalog("mu0", {{"n", 8}}));
    return std::pair{a.is_cnla && b.is_cnla && witness && mu == catalog("mu0", {{"n", 8}}), o.str()};
  });

  line(10, "property suites", [] {
    std::vector<std::pair<LieAlgebra, bool>> algebras;  // (g, filiform)
    for (const auto& e : catalog_entries()) {
      std::map<std::string, Scalar> params;
      for (const auto& name : e.params) params[name] = name == "n" ? 7 : Scalar(3);
      const LieAlgebra g = catalog(e.name, params);
      algebras.emplace_back(g, series_report(g).is_filiform && g.dim() >= 4);
    }
    std::size_t random = 0;
    for (int n : {6, 8, 10, 12}) {
      const auto pts = random_points(n, 50, 1000 + static_cast<std::uint64_t>(n));
      random += pts.size();
      for (const auto& p : pts) algebras.emplace_back(build(p), true);
    }
    std::size_t failed = 0;
    std::string first;
    const auto fail = [&](const std::string& what, const LieAlgebra& g) {
      if (failed++ == 0) first = what + " on " + algebra_to_json(g).dump();
    };
    // Oversubscribe on small machines so the parallel side really runs threaded.
    const int threads = std::max(4, omp_get_max_threads());
    omp_set_dynamic(0);
    omp_set_num_threads(threads);
    for (const auto& [g, filiform] : algebras) {
      const std::size_t n = g.dim();
      const auto r = h2(g);
      for (std::size_t i = 0; i < n; ++i) {
        const TwoForm df = coboundary(g, unit_vector(n, i));
        if (!is_two_cocycle(g, df)) fail("d o d = 0", g);
        if (filiform && sgn(det(df.matrix())) != 0) fail("degenerate coboundary", g);
      }
      if (r.dim_b() != oracle::dim_derived(g)) fail("dim B2 = dim [g,g]", g);
      if (!r.z.contains(r.b)) fail("B2 in Z2", g);
      if (filiform && n >= 6) {
        for (int l : {1, 2}) {
          const TwoForm w = omega_ell(static_cast<int>(n), l);
          oracle::Rows rows(n, std::vector<mpq_class>(n));
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) rows[a][b] = w(a, b);
          if (!oracle::is_cocycle(g, rows) || !is_two_cocycle(g, w)) fail("omega_l cocycle", g);
        }
      }
      const auto s1 = symplectic_verdict(g, 5), s2 = symplectic_verdict(g, 5);
      const auto f = frobenius_verdict(g, 5);
      if (f.status == FrobeniusStatus::Frobenius && s1.status != SymplecticStatus::Symplectic)
        fail("Frobenius implies symplectic", g);
      if (!verify(g, s1) || !verify(g, f)) fail("witness re-verification", g);
      try {
        embedding_check(g);
      } catch (const Error&) {
        fail("H2 into H1(g, g*)", g);
      }
      omp_set_num_threads(1);
      const auto s3 = symplectic_verdict(g, 5);
      const auto f3 = frobenius_verdict(g, 5);
      omp_set_num_threads(threads);
      const std::string j1 = verdict_to_json(s1).dump();
      if (j1 != verdict_to_json(s2).dump() || j1 != verdict_to_json(s3).dump() ||
          verdict_to_json(f).dump() != verdict_to_json(f3).dump())
        fail("bit-identical verdicts", g);
    }
    ReportOptions serial;
    serial.parallel = false;
    const bool report_same = report_to_json(class_tables(serial)).dump() == report_to_json(class_tables()).dump();
    if (!report_same) ++failed;
    std::ostringstream o;
    o << algebras.size() << " algebras (" << random << " random filiform points, " << threads
      << " threads), report parallel == serial " << report_same << ", failures " << failed;
    if (!first.empty()) o << ", first: " << first;
    return std::pair{failed == 0 && random == 200, o.str()};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
