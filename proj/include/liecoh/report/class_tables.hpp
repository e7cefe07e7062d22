#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/filiform/filiform.hpp"
#include "liecoh/io/json_io.hpp"

namespace liecoh {

/// What the classification tables state for a filiform law.
struct TableExpectation {
  ClassLabel label;
  std::size_t dim_h2 = 0;
  bool symplectic = false;
  /// Only set where the tables make a CNLA claim for the whole class.
  std::optional<bool> cnla;
};

/// p(x, y) from the A_{10,3} symplecticity criterion.
Scalar p10(const Scalar& x, const Scalar& y);

/// Throws UnsupportedDim where classify does, and BadParam for laws that
/// classify leaves unclassified.
TableExpectation table_expectation(const FiliformParams& p);

struct ReportRow {
  std::string id;
  std::string class_label;
  std::optional<FiliformParams> params;
  bool sampled = false;
  std::size_t dim_h2 = 0;
  std::string symplectic_status;
  std::optional<std::string> cnla_status;
  std::string expected;
  bool match = false;
  std::string note;
};

struct ReportOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  bool parallel = true;
};

struct ReportSummary {
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t unsampled = 0;
};

/// One row per sampled class of dimension 4 to 14, in a fixed order. Rows
/// are independent and draw from streams keyed by (seed, row id), so the
/// parallel and serial runs agree byte for byte.
ReportSummary class_tables(const ReportOptions& options = {});

Json report_to_json(const ReportSummary& s);
/// Plain Markdown table of the same rows.
std::string report_to_markdown(const ReportSummary& s);

}  // namespace liecoh
