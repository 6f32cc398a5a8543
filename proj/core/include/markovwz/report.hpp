#pragma once

// Flat records for evaluation and comparison reports, with JSON and CSV
// forms. Numbers travel as exact "n/d" strings next to their renderings.

#include <optional>
#include <string>
#include <vector>

#include "markovwz/catalog.hpp"

namespace markovwz::catalog {

inline constexpr const char* kReportSchema = "1";

struct ReportRecord {
  std::string id;
  std::string constant;
  index_t terms_used = 0;
  std::size_t digits_proven = 0;
  std::optional<Rational> ratio_bound;
  Rational partial_sum;
  Rational lower;
  Rational upper;
  Rounding rounding = Rounding::half_even;
  std::string rendering;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord to_record(const EvaluationReport& r);

/// {"schema": "1", "reports": [{...}, ...]}
std::string records_to_json(const std::vector<ReportRecord>& records);
std::vector<ReportRecord> records_from_json(const std::string& text);

/// Header line, then one line per record. Fields containing commas or
/// quotes are quoted.
std::string records_to_csv(const std::vector<ReportRecord>& records);
/// Inverse of records_to_csv. Throws ParseError on malformed input.
std::vector<ReportRecord> records_from_csv(const std::string& text);

std::string csv_header();

}  // namespace markovwz::catalog
