#include "liecoh/report/class_tables.hpp"

#include <functional>
#include <sstream>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/exactlin/linalg.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "liecoh/structures/rng.hpp"
#include "liecoh/structures/verdicts.hpp"

namespace liecoh {

Scalar p10(const Scalar& x, const Scalar& y) {
  const Scalar x2 = x * x, y2 = y * y;
  const Scalar a = 5 * y2 * y - 8 * y2 * x + 16 * y * x2 - 4 * x2 * x;
  const Scalar b = 5 * y2 * y - 16 * y2 * x + 10 * y * x2 - 2 * x2 * x;
  const Scalar c = 5 * y2 - 4 * y * x + 2 * x2;
  return a * b * c * (7 * y - 4 * x) * y;
}

namespace {

bool nz(const Scalar& x) { return sgn(x) != 0; }

// The CNLA claim for A_12^2 and A_{14,1}^2 holds off 200 a38 = 27 a26.
std::optional<bool> series2_cnla(const FiliformParams& p) {
  if (nz(200 * p.get(3, 8) - 27 * p.get(2, 6))) return true;
  return std::nullopt;
}

TableExpectation table_row(const FiliformParams& p, const ClassLabel& label) {
  const auto a = [&](int k, int s) { return p.get(k, s); };
  switch (label.n) {
    case 4: return {label, 2, true, false};
    case 6: return label.index == 1 ? TableExpectation{label, 2, false, false} : TableExpectation{label, 3, true, false};
    case 8:
      switch (label.index) {
        case 1:
        case 3: return {label, 3, false, {}};
        case 2: {
          const Scalar x = a(2, 5), y = a(3, 7);
          return {label, 3, nz(x * y * (x - y) * (5 * y - 2 * x)), {}};
        }
        default: return {label, 4, true, {}};
      }
    case 10:
      switch (label.index) {
        case 1:
        case 4:
        case 5: return {label, 3, false, {}};
        case 2:
        case 8: return {label, 4, false, {}};
        case 3: return {label, 3, nz(p10(a(2, 5), a(3, 7))), {}};
        case 6: return {label, 4, false, {}};
        case 7: {
          const Scalar f = 3 * a(4, 10) * (a(2, 6) + a(3, 8)) - 4 * a(3, 8) * a(3, 8);
          return {label, 4, nz(f), {}};
        }
        default: return {label, 5, true, {}};
      }
    default: break;
  }
  throw Error(ErrorKind::UnsupportedDim, "no table row for " + label.name());
}

}  // namespace

TableExpectation table_expectation(const FiliformParams& p) {
  const ClassLabel label = classify(p);
  const bool stated = label.n == 12 || label.n == 14;
  switch (label.family) {
    case ClassFamily::Table: return table_row(p, label);
    case ClassFamily::Series1:
      if (stated) return {label, 3, false, {}};
      break;
    case ClassFamily::Series2:
      if (label.n == 12) return {label, 3, true, series2_cnla(p)};
      break;
    case ClassFamily::Series2Refined:
      if (label.index == 1) return {label, 3, true, series2_cnla(p)};
      return {label, 2, false, {}};
    case ClassFamily::Series3:
      if (stated) return {label, 2, false, {}};
      break;
    case ClassFamily::Unclassified:
      throw Error(ErrorKind::BadParam, "law lies in no class of the tables");
  }
  throw Error(ErrorKind::UnsupportedDim, "dimensions are only tabulated up to 14 for " + label.name());
}

namespace {

struct Extra {
  bool ok = true;
  std::string note;
};

struct RowSpec {
  std::string id;
  std::string class_label;
  std::function<std::optional<FiliformParams>()> make;
  std::optional<bool> cnla;  // overrides the class-level claim
  std::function<Extra(const FiliformParams&, std::uint64_t)> extra;
  std::string unsampled_note;
};

using Fixed = std::map<AlphaIndex, Scalar>;

std::function<std::optional<FiliformParams>()> from_catalog(std::string name, std::map<std::string, Scalar> params = {}) {
  return [name = std::move(name), params = std::move(params)]() -> std::optional<FiliformParams> {
    return extract_params(catalog(name, params));
  };
}

std::function<std::optional<FiliformParams>()> completed(int n, Fixed fixed) {
  return [n, fixed = std::move(fixed)] {
    return complete_jacobi(n, fixed, [](const AlphaIndex&) { return Scalar(0); });
  };
}

std::function<std::optional<FiliformParams>()> closed(int n, Fixed fixed, Branch branch, bool on_p14 = false,
                                                      bool off_p14 = false) {
  return [=]() -> std::optional<FiliformParams> {
    FiliformParams p(n);
    for (const auto& [idx, v] : fixed) p.set(idx, v);
    if (on_p14 || off_p14) p.set(3, 10, p14(p) + (off_p14 ? 1 : 0));
    return jacobi_closure(p, branch);
  };
}

// det(r omega_2 + s omega) = (r - s a25)^2 r^2 s^2 for the printed n = 6 omega.
Extra det_fixture_6(const FiliformParams& p, std::uint64_t row_seed) {
  TwoForm w = TwoForm::zero(6);
  w.set(0, 5, 1);
  w.set(2, 3, p.get(2, 5));
  w.set(1, 3, p.get(2, 6));
  const LieAlgebra g = build(p);
  if (!is_two_cocycle(g, w)) return {false, "printed omega is not a cocycle"};
  const TwoForm w2 = omega_ell(6, 2);
  for (std::uint64_t t = 0; t < 5; ++t) {
    CounterRng rng(row_seed, 0, rng_stream::report, t);
    const Scalar r(static_cast<long>(rng.uniform(-20, 40)));
    const Scalar s(static_cast<long>(rng.uniform(-20, 40)));
    const Scalar lhs = det((r * w2 + s * w).matrix());
    const Scalar base = r - s * p.get(2, 5);
    if (lhs != base * base * r * r * s * s) {
      return {false, "det fixture fails at r = " + to_string(r) + ", s = " + to_string(s)};
    }
  }
  return {true, "det(r omega_2 + s omega) = (r - s a25)^2 r^2 s^2 at 5 random (r, s)"};
}

// Reports, without affecting the match, how many Z2 basis forms annihilate
// the vector e_{n-2} + ((n-6) a38 - a26) e_{n-1}.
Extra kernel_vector_note(const FiliformParams& p, std::uint64_t) {
  const int n = p.n();
  Vector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(n - 3)] = 1;
  v[static_cast<std::size_t>(n - 2)] = (n - 6) * p.get(3, 8) - p.get(2, 6);
  const Subspace z = two_cocycles(build(p));
  std::size_t killed = 0;
  for (std::size_t b = 0; b < z.dim(); ++b) {
    if (is_zero(TwoForm::from_coordinates(static_cast<std::size_t>(n), z.basis_vector(b)).matrix().apply(v))) ++killed;
  }
  return {true, "vector e" + std::to_string(n - 2) + " + " + to_string(v[static_cast<std::size_t>(n - 2)]) + " e" +
                    std::to_string(n - 1) + " is annihilated by " + std::to_string(killed) + " of " +
                    std::to_string(z.dim()) + " Z2 basis forms"};
}

std::vector<RowSpec> row_specs() {
  std::vector<RowSpec> rows;
  const auto add = [&](std::string id, std::string label, std::function<std::optional<FiliformParams>()> make,
                       std::optional<bool> cnla = {}) {
    rows.push_back({std::move(id), std::move(label), std::move(make), cnla, {}, {}});
  };
  add("n4", "A_4_1", from_catalog("n4"));
  add("contre6", "A_6_1", from_catalog("contre6"));
  add("mu6_1", "A_6_2", from_catalog("mu6_1"));
  add("mu6_2", "A_6_2", from_catalog("mu6_2"));
  rows.back().extra = det_fixture_6;
  add("mu6_3", "A_6_2", from_catalog("mu6_3"));

  add("A_8_1", "A_8_1", completed(8, {{{4, 8}, 1}}));
  for (const Scalar& a : {Scalar(2), Scalar(-1), Scalar(0), Scalar(1), Scalar(5, 2), Scalar(-1, 2)}) {
    add("mu8_6(alpha=" + to_string(a) + ")", sgn(2 * a + 1) == 0 ? "A_8_3" : "A_8_2",
        from_catalog("mu8_6", {{"alpha", a}}), false);
  }
  add("A_8_3", "A_8_3", completed(8, {{{2, 5}, 1}, {{3, 7}, -2}}));
  add("mu8_5(alpha=2)", "A_8_2", from_catalog("mu8_5", {{"alpha", 2}}), true);
  add("mu8_5(alpha=-1)", "A_8_2", from_catalog("mu8_5", {{"alpha", -1}}), true);
  add("mu8_9(alpha=1)", "A_8_4", from_catalog("mu8_9", {{"alpha", 1}}), true);
  add("mu8_10(alpha=1)", "A_8_4", from_catalog("mu8_10", {{"alpha", 1}}), false);
  add("mu8_11_0", "A_8_4", from_catalog("mu8_11_0"), true);
  add("mu8_15", "A_8_4", from_catalog("mu8_15"), true);
  for (const char* name : {"mu8_16", "mu8_17", "mu8_18", "mu8_19"}) add(name, "A_8_4", from_catalog(name), false);

  add("A_10_1", "A_10_1", completed(10, {{{5, 10}, 1}, {{2, 5}, 1}, {{3, 7}, 1}}));
  add("A_10_2", "A_10_2", completed(10, {{{5, 10}, 1}}));
  add("A_10_3(2,1)", "A_10_3", completed(10, {{{2, 5}, 1}, {{3, 7}, 2}}));
  add("A_10_3(7,4)", "A_10_3", completed(10, {{{2, 5}, 7}, {{3, 7}, 4}}));
  add("A_10_4", "A_10_4", completed(10, {{{2, 5}, 1}, {{3, 7}, 1}}));
  add("A_10_5", "A_10_5", completed(10, {{{4, 9}, 1}, {{2, 6}, 1}}));
  add("A_10_6", "A_10_6", completed(10, {{{4, 9}, 1}}));
  add("A_10_7", "A_10_7", completed(10, {{{2, 7}, 1}}));
  add("A_10_7(f=0)", "A_10_7", completed(10, {{{2, 7}, 1}, {{3, 8}, 1}, {{4, 10}, Scalar(4, 3)}}));
  add("A_10_7(f!=0)", "A_10_7", completed(10, {{{2, 7}, 1}, {{3, 8}, 1}, {{4, 10}, 1}}));
  add("A_10_8", "A_10_8", completed(10, {{{4, 10}, 1}, {{2, 6}, 1}}));
  add("A_10_9", "A_10_9", from_catalog("mu0", {{"n", 10}}));

  add("A_12^1", "A_12^1", closed(12, {{{2, 5}, 1}, {{3, 8}, 1}}, Branch::A1));
  rows.back().extra = kernel_vector_note;
  add("A_12^2", "A_12^2", closed(12, {{{2, 5}, 1}, {{3, 7}, Scalar(1, 10)}, {{3, 8}, 1}}, Branch::A2));
  add("A_12^3", "A_12^3", [] { return std::optional<FiliformParams>(); });
  rows.back().unsampled_note = "no rational point: with a25 = a6_12 = 1 the low equations force 5 a37^2 = 2";

  add("A_14^1", "A_14^1", closed(14, {{{2, 5}, 1}, {{3, 8}, 1}}, Branch::A1));
  rows.back().extra = kernel_vector_note;
  add("A_14_1^2", "A_14_1^2",
      closed(14, {{{2, 5}, 1}, {{3, 7}, Scalar(1, 10)}, {{3, 8}, 1}}, Branch::A2, true));
  add("A_14_2^2", "A_14_2^2",
      closed(14, {{{2, 5}, 1}, {{3, 7}, Scalar(1, 10)}, {{3, 8}, 1}}, Branch::A2, false, true));
  add("A_14^3", "A_14^3", [] { return std::optional<FiliformParams>(); });
  rows.back().unsampled_note = "no rational point found";
  return rows;
}

std::uint64_t row_key(const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::string describe(const TableExpectation& e, std::optional<bool> cnla) {
  std::string out = e.label.name() + ": dim H2 = " + std::to_string(e.dim_h2) + ", " +
                    (e.symplectic ? "symplectic" : "not symplectic");
  if (cnla) out += *cnla ? ", CNLA" : ", not CNLA";
  return out;
}

ReportRow evaluate(const RowSpec& spec, const ReportOptions& options) {
  ReportRow row;
  row.id = spec.id;
  row.class_label = spec.class_label;
  const std::uint64_t row_seed = CounterRng(options.seed, row_key(spec.id), rng_stream::report, 0).next();

  std::optional<FiliformParams> p;
  try {
    p = spec.make();
  } catch (const Error& e) {
    row.note = std::string("no sample: ") + e.what();
  }
  if (!p) {
    row.sampled = false;
    if (row.note.empty()) row.note = spec.unsampled_note.empty() ? "no Jacobi-consistent sample found" : spec.unsampled_note;
    return row;
  }
  row.sampled = true;
  row.params = *p;

  const LieAlgebra g = build(*p, spec.id);
  const TableExpectation expect = table_expectation(*p);
  const std::optional<bool> cnla_expect = spec.cnla ? spec.cnla : expect.cnla;
  row.expected = describe(expect, cnla_expect);

  row.dim_h2 = h2(g).dim_h();
  SymplecticOptions sopt;
  sopt.pfaffian = true;
  const SymplecticVerdict sv = symplectic_verdict(g, row_seed, options.trials, sopt);
  row.symplectic_status = std::string(to_string(sv.status));
  const CnlaVerdict cv = is_cnla(g, row_seed);
  row.cnla_status = cv.is_cnla ? "CNLA" : "not CNLA";

  std::vector<std::string> notes;
  const std::string computed_label = expect.label.name();
  bool ok = computed_label == spec.class_label;
  if (!ok) notes.push_back("classified as " + computed_label);
  ok = ok && row.dim_h2 == expect.dim_h2;
  ok = ok && (sv.status == SymplecticStatus::Symplectic) == expect.symplectic;
  if (cnla_expect) ok = ok && cv.is_cnla == *cnla_expect;
  if (sv.certificate) notes.push_back("certificate " + std::string(to_string(sv.certificate->kind)));
  if (sv.status == SymplecticStatus::ProbablyNotSymplectic) notes.push_back("negative is probabilistic");
  if (!sv.note.empty()) notes.push_back(sv.note);
  if (spec.extra) {
    const Extra x = spec.extra(*p, row_seed);
    ok = ok && x.ok;
    notes.push_back(x.note);
  }
  row.match = ok;
  for (std::size_t i = 0; i < notes.size(); ++i) row.note += (i ? "; " : "") + notes[i];
  return row;
}

}  // namespace

ReportSummary class_tables(const ReportOptions& options) {
  const std::vector<RowSpec> specs = row_specs();
  ReportSummary s;
  s.seed = options.seed;
  s.rows.resize(specs.size());
  const auto count = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    s.rows[static_cast<std::size_t>(i)] = evaluate(specs[static_cast<std::size_t>(i)], options);
  }
  for (const auto& r : s.rows) {
    if (!r.sampled) {
      ++s.unsampled;
    } else if (r.match) {
      ++s.matches;
    } else {
      ++s.mismatches;
    }
  }
  return s;
}

Json report_to_json(const ReportSummary& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    Json j{{"id", r.id}, {"class_label", r.class_label}, {"sampled", r.sampled}};
    j["params"] = r.params ? params_to_json(*r.params) : Json(nullptr);
    if (r.sampled) {
      j["dim_H2"] = r.dim_h2;
      j["symplectic_status"] = r.symplectic_status;
      j["cnla_status"] = r.cnla_status ? Json(*r.cnla_status) : Json(nullptr);
      j["expected"] = r.expected;
      j["match"] = r.match;
    }
    j["note"] = r.note;
    rows.push_back(std::move(j));
  }
  return Json{{"seed", s.seed},
              {"summary", {{"rows", s.rows.size()}, {"matches", s.matches}, {"mismatches", s.mismatches},
                           {"unsampled", s.unsampled}}},
              {"rows", std::move(rows)}};
}

std::string report_to_markdown(const ReportSummary& s) {
  std::ostringstream out;
  out << "| row | class | dim H2 | symplectic | CNLA | expected | match | note |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : s.rows) {
    out << "| " << r.id << " | " << r.class_label << " | ";
    if (r.sampled) {
      out << r.dim_h2 << " | " << r.symplectic_status << " | " << r.cnla_status.value_or("") << " | " << r.expected
          << " | " << (r.match ? "yes" : "NO");
    } else {
      out << " |  |  |  | unsampled";
    }
    out << " | " << r.note << " |\n";
  }
  out << "\nseed " << s.seed << ": " << s.matches << " match, " << s.mismatches << " mismatch, " << s.unsampled
      << " unsampled\n";
  return out.str();
}

}  // namespace liecoh
