#include "liecoh/liealg/catalog.hpp"

#include <algorithm>
#include <functional>

#include "liecoh/error.hpp"
#include "liecoh/filiform/filiform.hpp"

namespace liecoh {

namespace {

using Params = std::map<std::string, Scalar>;

struct Recipe {
  CatalogEntry entry;
  std::function<LieAlgebra(const Params&)> make;
};

Scalar param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw Error(ErrorKind::MissingParam, "missing parameter '" + name + "'");
  return it->second;
}

std::size_t count_param(const Params& p, const std::string& name, std::size_t min) {
  const Scalar v = param(p, name);
  if (v.get_den() != 1 || v < static_cast<long>(min) || v > 64) {
    throw Error(ErrorKind::BadParam, "parameter '" + name + "' must be an integer in [" + std::to_string(min) + ", 64]");
  }
  return static_cast<std::size_t>(v.get_num().get_ui());
}

LieAlgebra r3lam(const Params& p, std::size_t dim, const std::string& label) {
  const Scalar lambda = param(p, "lambda");
  if (sgn(lambda) == 0) throw Error(ErrorKind::BadParam, "r3lam needs lambda != 0");
  return LieAlgebraBuilder(dim).add(1, 2, 2, 1).add(1, 3, 3, lambda).build(label);
}

LieAlgebra filiform_law(int n, std::initializer_list<std::pair<AlphaIndex, Scalar>> alpha, const std::string& label) {
  FiliformParams p(n);
  for (const auto& [idx, v] : alpha) p.set(idx, v);
  return build(p, label);
}

LieAlgebra sl2(std::size_t dim, const std::string& label) {
  return LieAlgebraBuilder(dim).add(1, 2, 2, 2).add(1, 3, 3, -2).add(2, 3, 1, 1).build(label);
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> all = [] {
    std::vector<Recipe> r;
    auto add = [&](std::string name, std::vector<std::string> params, std::string description,
                   std::function<LieAlgebra(const Params&)> make) {
      r.push_back({{std::move(name), std::move(params), std::move(description)}, std::move(make)});
    };
    add("abelian", {"n"}, "abelian Lie algebra k^n", [](const Params& p) {
      const std::size_t n = count_param(p, "n", 1);
      return LieAlgebra(n, "abelian(" + std::to_string(n) + ")");
    });
    add("n3", {}, "Heisenberg algebra: [e1,e2]=e3",
        [](const Params&) { return LieAlgebraBuilder(3).add(1, 2, 3, 1).build("n3"); });
    add("n3_c", {}, "n3 + k: [e1,e2]=e3",
        [](const Params&) { return LieAlgebraBuilder(4).add(1, 2, 3, 1).build("n3_c"); });
    add("n4", {}, "[e1,e2]=e3, [e1,e3]=e4",
        [](const Params&) { return LieAlgebraBuilder(4).add(1, 2, 3, 1).add(1, 3, 4, 1).build("n4"); });
    add("r2", {}, "[e1,e2]=e1", [](const Params&) { return LieAlgebraBuilder(2).add(1, 2, 1, 1).build("r2"); });
    add("r2_c2", {}, "r2 + k^2: [e1,e2]=e1",
        [](const Params&) { return LieAlgebraBuilder(4).add(1, 2, 1, 1).build("r2_c2"); });
    add("r3lam", {"lambda"}, "[e1,e2]=e2, [e1,e3]=lambda e3, lambda != 0",
        [](const Params& p) { return r3lam(p, 3, "r3lam"); });
    add("r3lam_c", {"lambda"}, "r3lam + k: [e1,e2]=e2, [e1,e3]=lambda e3, lambda != 0",
        [](const Params& p) { return r3lam(p, 4, "r3lam_c"); });
    add("r3m1_c", {}, "r3lam + k at lambda = -1: [e1,e2]=e2, [e1,e3]=-e3",
        [](const Params&) { return LieAlgebraBuilder(4).add(1, 2, 2, 1).add(1, 3, 3, -1).build("r3m1_c"); });
    add("r2_r2", {}, "r2 + r2: [e1,e2]=e1, [e3,e4]=e3",
        [](const Params&) { return LieAlgebraBuilder(4).add(1, 2, 1, 1).add(3, 4, 3, 1).build("r2_r2"); });
    add("sl2", {}, "[e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1", [](const Params&) { return sl2(3, "sl2"); });
    add("sl2_c", {}, "sl2 + k", [](const Params&) { return sl2(4, "sl2_c"); });
    add("g1m1", {}, "g1(-1): [e1,e2]=e2, [e1,e3]=e3, [e1,e4]=-e4", [](const Params&) {
      return LieAlgebraBuilder(4).add(1, 2, 2, 1).add(1, 3, 3, 1).add(1, 4, 4, -1).build("g1m1");
    });
    add("g2", {"alpha"}, "g2(alpha,alpha): [e1,e2]=e3, [e1,e3]=e4, [e1,e4]=alpha e2 - alpha e3 + e4",
        [](const Params& p) {
          const Scalar a = param(p, "alpha");
          return LieAlgebraBuilder(4)
              .add(1, 2, 3, 1)
              .add(1, 3, 4, 1)
              .add(1, 4, 2, a)
              .add(1, 4, 3, -a)
              .add(1, 4, 4, 1)
              .build("g2");
        });
    add("g6", {}, "[e1,e2]=e2, [e1,e3]=e3, [e1,e4]=2e4, [e2,e3]=e4", [](const Params&) {
      return LieAlgebraBuilder(4).add(1, 2, 2, 1).add(1, 3, 3, 1).add(1, 4, 4, 2).add(2, 3, 4, 1).build("g6");
    });
    add("g8", {"alpha"}, "[e1,e2]=e3, [e1,e3]=-alpha e2 + e3, [e1,e4]=e4, [e2,e3]=e4", [](const Params& p) {
      const Scalar a = param(p, "alpha");
      return LieAlgebraBuilder(4)
          .add(1, 2, 3, 1)
          .add(1, 3, 2, -a)
          .add(1, 3, 3, 1)
          .add(1, 4, 4, 1)
          .add(2, 3, 4, 1)
          .build("g8");
    });
    add("contre6", {}, "[e1,ei]=e(i+1), [e2,e5]=-e6, [e3,e4]=e6",
        [](const Params&) { return filiform_law(6, {{{3, 6}, 1}}, "contre6"); });
    add("mu0", {"n"}, "model filiform law, all alpha = 0", [](const Params& p) {
      const std::size_t n = count_param(p, "n", 4);
      return build(FiliformParams(static_cast<int>(n)), "mu0(" + std::to_string(n) + ")");
    });
    add("mu6_1", {}, "n = 6, all alpha = 0", [](const Params&) { return filiform_law(6, {}, "mu6_1"); });
    add("mu6_2", {}, "n = 6, alpha_{2,5} = 1",
        [](const Params&) { return filiform_law(6, {{{2, 5}, 1}}, "mu6_2"); });
    add("mu6_3", {}, "n = 6, alpha_{2,6} = 1",
        [](const Params&) { return filiform_law(6, {{{2, 6}, 1}}, "mu6_3"); });
    add("mu8_5", {"alpha"}, "n = 8, alpha_{2,5} = alpha, alpha_{3,7} = alpha_{3,8} = 1", [](const Params& p) {
      return filiform_law(8, {{{2, 5}, param(p, "alpha")}, {{3, 7}, 1}, {{3, 8}, 1}}, "mu8_5");
    });
    add("mu8_6", {"alpha"}, "n = 8, alpha_{2,5} = alpha, alpha_{3,7} = 1", [](const Params& p) {
      return filiform_law(8, {{{2, 5}, param(p, "alpha")}, {{3, 7}, 1}}, "mu8_6");
    });
    add("mu8_9", {"alpha"}, "n = 8, alpha_{2,6} = alpha, alpha_{2,7} = alpha_{3,8} = 1", [](const Params& p) {
      return filiform_law(8, {{{2, 6}, param(p, "alpha")}, {{2, 7}, 1}, {{3, 8}, 1}}, "mu8_9");
    });
    add("mu8_10", {"alpha"}, "n = 8, alpha_{2,6} = alpha, alpha_{3,8} = 1", [](const Params& p) {
      return filiform_law(8, {{{2, 6}, param(p, "alpha")}, {{3, 8}, 1}}, "mu8_10");
    });
    add("mu8_11_0", {}, "n = 8, alpha_{2,7} = alpha_{2,8} = 1",
        [](const Params&) { return filiform_law(8, {{{2, 7}, 1}, {{2, 8}, 1}}, "mu8_11_0"); });
    add("mu8_15", {}, "n = 8, alpha_{2,6} = alpha_{2,7} = 1",
        [](const Params&) { return filiform_law(8, {{{2, 6}, 1}, {{2, 7}, 1}}, "mu8_15"); });
    add("mu8_16", {}, "n = 8, alpha_{2,6} = 1",
        [](const Params&) { return filiform_law(8, {{{2, 6}, 1}}, "mu8_16"); });
    add("mu8_17", {}, "n = 8, alpha_{2,7} = 1",
        [](const Params&) { return filiform_law(8, {{{2, 7}, 1}}, "mu8_17"); });
    add("mu8_18", {}, "n = 8, alpha_{2,8} = 1",
        [](const Params&) { return filiform_law(8, {{{2, 8}, 1}}, "mu8_18"); });
    add("mu8_19", {}, "n = 8, all alpha = 0", [](const Params&) { return filiform_law(8, {}, "mu8_19"); });
    return r;
  }();
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : recipes()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

LieAlgebra catalog(const std::string& name, const std::map<std::string, Scalar>& params) {
  const auto& all = recipes();
  auto it = std::find_if(all.begin(), all.end(), [&](const Recipe& r) { return r.entry.name == name; });
  if (it == all.end()) throw Error(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
  for (const auto& [key, value] : params) {
    if (std::find(it->entry.params.begin(), it->entry.params.end(), key) == it->entry.params.end()) {
      throw Error(ErrorKind::BadParam, "'" + name + "' takes no parameter '" + key + "'");
    }
  }
  LieAlgebra g = it->make(params);
  const auto violations = jacobi_check(g);
  if (!violations.empty()) {
    throw Error(ErrorKind::InvariantViolation, "catalog entry '" + name + "' fails the Jacobi identity");
  }
  return g;
}

}  // namespace liecoh
