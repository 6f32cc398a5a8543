#include "markovwz/report.hpp"

#include <sstream>

#include <json.hpp>

namespace markovwz::catalog {

namespace {

using nlohmann::json;

const std::vector<std::string> kColumns{"schema",      "id",    "constant", "terms_used", "digits_proven",
                                        "ratio_bound", "partial_sum", "lower", "upper", "rounding",
                                        "rendering"};

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a nonnegative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

std::vector<std::string> fields_of(const ReportRecord& r) {
  return {kReportSchema,
          r.id,
          r.constant,
          std::to_string(r.terms_used),
          std::to_string(r.digits_proven),
          r.ratio_bound ? r.ratio_bound->str() : "",
          r.partial_sum.str(),
          r.lower.str(),
          r.upper.str(),
          to_string(r.rounding),
          r.rendering};
}

}  // namespace

ReportRecord to_record(const EvaluationReport& r) {
  ReportRecord out;
  out.id = r.id;
  out.constant = r.constant;
  out.terms_used = r.terms_used;
  out.digits_proven = r.digits_proven;
  out.ratio_bound = r.ratio_bound;
  out.partial_sum = r.partial_sum;
  out.lower = r.enclosure.lower();
  out.upper = r.enclosure.upper();
  out.rounding = r.rendering.rounding;
  out.rendering = r.rendering.str();
  return out;
}

std::string records_to_json(const std::vector<ReportRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json j;
    j["id"] = r.id;
    j["constant"] = r.constant;
    j["terms_used"] = r.terms_used;
    j["digits_proven"] = r.digits_proven;
    j["ratio_bound"] = r.ratio_bound ? json(r.ratio_bound->str()) : json(nullptr);
    j["partial_sum"] = r.partial_sum.str();
    j["enclosure"] = {{"lower", r.lower.str()}, {"upper", r.upper.str()}};
    j["rounding"] = to_string(r.rounding);
    j["rendering"] = r.rendering;
    arr.push_back(std::move(j));
  }
  json doc;
  doc["schema"] = kReportSchema;
  doc["reports"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::vector<ReportRecord> records_from_json(const std::string& text) {
  std::vector<ReportRecord> out;
  try {
    const json doc = json::parse(text);
    if (doc.at("schema").get<std::string>() != kReportSchema) throw ParseError("unsupported report schema");
    for (const auto& j : doc.at("reports")) {
      ReportRecord r;
      r.id = j.at("id").get<std::string>();
      r.constant = j.at("constant").get<std::string>();
      r.terms_used = j.at("terms_used").get<index_t>();
      r.digits_proven = j.at("digits_proven").get<std::size_t>();
      if (!j.at("ratio_bound").is_null()) r.ratio_bound = Rational::parse(j.at("ratio_bound").get<std::string>());
      r.partial_sum = Rational::parse(j.at("partial_sum").get<std::string>());
      r.lower = Rational::parse(j.at("enclosure").at("lower").get<std::string>());
      r.upper = Rational::parse(j.at("enclosure").at("upper").get<std::string>());
      r.rounding = parse_rounding(j.at("rounding").get<std::string>());
      r.rendering = j.at("rendering").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

std::string csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kColumns.size(); ++i) h += (i ? "," : "") + kColumns[i];
  return h;
}

std::string records_to_csv(const std::vector<ReportRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) {
    const auto f = fields_of(r);
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + quote_csv(f[i]);
    out += "\n";
  }
  return out;
}

std::vector<ReportRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) throw ParseError("missing or unexpected CSV header");
  std::vector<ReportRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != kColumns.size()) throw ParseError("CSV row has " + std::to_string(f.size()) + " fields");
    if (f[0] != kReportSchema) throw ParseError("unsupported report schema '" + f[0] + "'");
    ReportRecord r;
    r.id = f[1];
    r.constant = f[2];
    r.terms_used = parse_count(f[3]);
    r.digits_proven = parse_count(f[4]);
    if (!f[5].empty()) r.ratio_bound = Rational::parse(f[5]);
    r.partial_sum = Rational::parse(f[6]);
    r.lower = Rational::parse(f[7]);
    r.upper = Rational::parse(f[8]);
    r.rounding = parse_rounding(f[9]);
    r.rendering = f[10];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace markovwz::catalog
