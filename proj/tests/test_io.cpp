#include <doctest.h>

#include "liecoh/error.hpp"
#include "liecoh/io/json_io.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "liecoh/report/class_tables.hpp"
#include "support.hpp"

using namespace liecoh;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("scalars in json") {
  CHECK(scalar_from_json(Json("3/6")) == Scalar(1, 2));
  CHECK(scalar_from_json(Json(-4)) == -4);
  CHECK(scalar_to_json(Scalar(-6) / 4) == Json("-3/2"));
  CHECK(kind_of([] { scalar_from_json(Json(0.5)); }) == ErrorKind::ParseError);
}

TEST_CASE("algebras round-trip through json text") {
  for (const auto& e : catalog_entries()) {
    std::map<std::string, Scalar> params;
    for (const auto& name : e.params) params[name] = name == "n" ? 6 : Scalar(-3, 7);
    const LieAlgebra g = catalog(e.name, params);
    const Json j = algebra_to_json(g);
    const LieAlgebra back = algebra_from_json(parse_json(j.dump()));
    CHECK_MESSAGE(back == g, e.name);
    CHECK(algebra_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("params round-trip through json text") {
  gen::Rng r(6);
  for (int n : {6, 8, 10, 12}) {
    const auto p = gen::filiform(r, n);
    if (!p) continue;
    const Json j = params_to_json(*p);
    CHECK(params_from_json(parse_json(j.dump())) == *p);
  }
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { parse_json("{\"dim\": 3,"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { algebra_from_json(parse_json("[1, 2]")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { algebra_from_json(parse_json(R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "terms": []}]})")); }) ==
        ErrorKind::BadIndex);
  CHECK(kind_of([] { params_from_json(parse_json(R"({"n": 8, "alpha": {"3,6": "1"}})")); }) == ErrorKind::BadIndex);
  CHECK(kind_of([] { params_from_json(parse_json(R"({"n": 8, "alpha": {"2,5": "x"}})")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("verdict documents carry their status") {
  const auto v = verdict_to_json(symplectic_verdict(catalog("n4"), 0));
  CHECK(v["status"] == "Symplectic");
  const auto c = verdict_to_json(symplectic_verdict(catalog("contre6"), 0));
  CHECK(c["status"] == "NotSymplecticCertified");
}

TEST_CASE("report output does not depend on threading") {
  ReportOptions serial;
  serial.parallel = false;
  ReportOptions parallel;
  const auto a = class_tables(serial), b = class_tables(parallel);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(report_to_markdown(a) == report_to_markdown(b));
  CHECK(a.mismatches == 0);
}
