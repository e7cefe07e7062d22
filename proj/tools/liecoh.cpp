// liecoh: command-line front end. Every command prints one JSON document on
// stdout; errors go out as {"error": {...}} with exit 2 (bad input) or 3
// (a broken internal invariant).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "liecoh/cohomology/cohomology.hpp"
#include "liecoh/error.hpp"
#include "liecoh/filiform/filiform.hpp"
#include "liecoh/io/json_io.hpp"
#include "liecoh/liealg/catalog.hpp"
#include "liecoh/report/class_tables.hpp"
#include "liecoh/structures/verdicts.hpp"

namespace {

using liecoh::Error;
using liecoh::ErrorKind;
using liecoh::Json;

struct UsageError {
  std::string kind;
  std::string detail;
};

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"IoError", "cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

liecoh::LieAlgebra load_algebra(const std::string& path) {
  return liecoh::algebra_from_json(liecoh::parse_json(read_source(path)));
}

// Inline JSON when the argument looks like an object, else a path or "-".
liecoh::FiliformParams load_params(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && arg[first] == '{';
  return liecoh::params_from_json(liecoh::parse_json(inline_json ? arg : read_source(arg)));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"IoError", "cannot write " + path};
  out << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int emit_error(const std::string& kind, const std::string& detail, int code) {
  emit(Json{{"error", {{"kind", kind}, {"detail", detail}}}});
  return code;
}

Json info_json(const liecoh::LieAlgebra& g) {
  Json out{{"label", g.label()}, {"dim", g.dim()}};
  out["series"] = liecoh::series_to_json(liecoh::series_report(g));
  out["dim_derivations"] = liecoh::derivations(g).dim();
  try {
    const auto p = liecoh::extract_params(g);
    out["filiform_params"] = liecoh::params_to_json(p);
    out["class"] = liecoh::classify(p).name();
  } catch (const Error&) {
    out["filiform_params"] = nullptr;
  }
  return out;
}

Json classify_json(const liecoh::FiliformParams& p) {
  Json out{{"family", liecoh::classify(p).name()}};
  try {
    const auto e = liecoh::table_expectation(p);
    Json expected{{"dim_H2", e.dim_h2}, {"symplectic", e.symplectic}};
    expected["cnla"] = e.cnla ? Json(*e.cnla) : Json(nullptr);
    out["expected"] = std::move(expected);
  } catch (const Error&) {
    out["expected"] = nullptr;
  }
  return out;
}

std::map<std::string, liecoh::Scalar> parse_catalog_params(const std::vector<std::string>& items) {
  std::map<std::string, liecoh::Scalar> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError{"UsageError", "--param expects name=p/q, got " + item};
    out[item.substr(0, eq)] = liecoh::scalar_from_json(Json(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact second cohomology and symplectic, Frobenius, CNLA and affine verdicts for Lie algebras"};
  app.require_subcommand(1);

  std::string file = "-";
  std::uint64_t seed = 0;
  std::size_t trials = liecoh::default_trials;
  bool pfaffian = false;

  const auto algebra_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "algebra JSON file, - for stdin")->required();
    return sub;
  };
  auto* check = algebra_cmd("check", "Jacobi identity violations");
  auto* info = algebra_cmd("info", "series, center and filiform class");
  auto* h2cmd = algebra_cmd("h2", "H^2(g, k) with canonical representatives");
  auto* symp = algebra_cmd("symplectic", "symplectic verdict");
  symp->add_option("--seed", seed);
  symp->add_option("--trials", trials)->check(CLI::PositiveNumber);
  symp->add_flag("--pfaffian", pfaffian, "escalate to the generic Pfaffian when sampling finds nothing");
  auto* frob = algebra_cmd("frobenius", "Frobenius verdict");
  frob->add_option("--seed", seed);
  frob->add_option("--trials", trials)->check(CLI::PositiveNumber);
  auto* cnla = algebra_cmd("cnla", "characteristic nilpotency verdict");
  cnla->add_option("--seed", seed);
  auto* affine = algebra_cmd("affine", "affine structure witness");
  affine->add_option("--seed", seed);
  affine->add_option("--trials", trials)->check(CLI::PositiveNumber);

  std::string params_arg;
  std::string out_file;
  auto* build = app.add_subcommand("build", "algebra JSON from filiform parameters");
  build->add_option("--params", params_arg, "inline JSON, a file, or -")->required();
  build->add_option("-o,--output", out_file);
  auto* classify = app.add_subcommand("classify", "class of a filiform parameter set");
  classify->add_option("--params", params_arg, "inline JSON, a file, or -")->required();

  auto* catalog = app.add_subcommand("catalog", "named algebras");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "all names");
  std::string cat_name;
  std::vector<std::string> cat_params;
  auto* cat_show = catalog->add_subcommand("show", "algebra JSON of a named algebra");
  cat_show->add_option("name", cat_name)->required();
  cat_show->add_option("--param", cat_params, "name=p/q");

  auto* report = app.add_subcommand("report", "classification reports");
  report->require_subcommand(1);
  auto* tables = report->add_subcommand("paper-tables", "recompute every tabulated class row");
  std::string out_dir;
  bool serial = false;
  tables->add_option("--seed", seed);
  tables->add_option("--trials", trials)->check(CLI::PositiveNumber);
  tables->add_option("--out", out_dir, "directory for report.json and report.md");
  tables->add_flag("--serial", serial, "evaluate rows on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what(), 2);
  }

  try {
    if (check->parsed()) {
      emit(liecoh::jacobi_to_json(liecoh::jacobi_check(load_algebra(file))));
    } else if (info->parsed()) {
      emit(info_json(load_algebra(file)));
    } else if (h2cmd->parsed()) {
      const auto g = load_algebra(file);
      emit(liecoh::cohomology_to_json(liecoh::h2(g), g.dim()));
    } else if (symp->parsed()) {
      liecoh::SymplecticOptions opt;
      opt.pfaffian = pfaffian;
      emit(liecoh::verdict_to_json(liecoh::symplectic_verdict(load_algebra(file), seed, trials, opt)));
    } else if (frob->parsed()) {
      emit(liecoh::verdict_to_json(liecoh::frobenius_verdict(load_algebra(file), seed, trials)));
    } else if (cnla->parsed()) {
      emit(liecoh::verdict_to_json(liecoh::is_cnla(load_algebra(file), seed)));
    } else if (affine->parsed()) {
      emit(liecoh::verdict_to_json(liecoh::affine_witness(load_algebra(file), seed, trials)));
    } else if (build->parsed()) {
      const auto g = liecoh::build(load_params(params_arg));
      if (!liecoh::is_lie_algebra(g)) std::cerr << "liecoh: warning: these parameters violate the Jacobi identity\n";
      const Json doc = liecoh::algebra_to_json(g);
      if (out_file.empty()) {
        emit(doc);
      } else {
        write_file(out_file, doc.dump(2) + "\n");
        emit(Json{{"written", out_file}, {"dim", g.dim()}});
      }
    } else if (classify->parsed()) {
      emit(classify_json(load_params(params_arg)));
    } else if (cat_list->parsed()) {
      Json list = Json::array();
      for (const auto& e : liecoh::catalog_entries()) {
        list.push_back({{"name", e.name}, {"params", e.params}, {"description", e.description}});
      }
      emit(list);
    } else if (cat_show->parsed()) {
      emit(liecoh::algebra_to_json(liecoh::catalog(cat_name, parse_catalog_params(cat_params))));
    } else if (tables->parsed()) {
      const auto summary = liecoh::class_tables({seed, trials, !serial});
      const Json doc = liecoh::report_to_json(summary);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file((std::filesystem::path(out_dir) / "report.json").string(), doc.dump(2) + "\n");
        write_file((std::filesystem::path(out_dir) / "report.md").string(), liecoh::report_to_markdown(summary));
      }
      emit(doc);
      return summary.mismatches == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    return emit_error(e.kind, e.detail, 2);
  } catch (const Error& e) {
    const bool internal = e.kind() == ErrorKind::InvariantViolation;
    return emit_error(std::string(liecoh::to_string(e.kind())), e.what(), internal ? 3 : 2);
  } catch (const std::filesystem::filesystem_error& e) {
    return emit_error("IoError", e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what(), 3);
  }
  return 0;
}
