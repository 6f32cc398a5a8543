#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "markovwz/catalog.hpp"
#include "markovwz/markov.hpp"
#include "markovwz/report.hpp"

namespace markovwz::cli {

namespace {

using catalog::EvaluationReport;
using catalog::FormulaEntry;
using catalog::ReportRecord;
using nlohmann::json;

// Thrown for bad flags or values after CLI11 has parsed the line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

struct Common {
  std::string format;
  std::string output;
  std::string fixture;
  std::map<std::string, std::string> params;  // raw "n/d" strings from flags
};

Format resolve_format(const Common& c) {
  if (!c.format.empty()) return parse_format(c.format);
  if (const char* env = std::getenv("MARKOVWZ_FORMAT"); env && *env) return parse_format(env);
  return Format::text;
}

// Fixture values first, then flags on top.
catalog::EntryParams collect_params(const Common& c) {
  catalog::EntryParams out;
  if (!c.fixture.empty()) {
    std::ifstream in(c.fixture);
    if (!in) throw UsageError("cannot read fixture '" + c.fixture + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw UsageError("malformed fixture '" + c.fixture + "': " + e.what());
    }
    if (!doc.is_object()) throw UsageError("fixture must be a JSON object of \"n/d\" strings");
    // {"fixture": "markov-3phi2", "params": {...}} or a flat parameter object
    if (doc.contains("fixture") && doc["fixture"] != "markov-3phi2") {
      throw UsageError("unknown fixture name in '" + c.fixture + "'");
    }
    if (doc.contains("params")) doc = doc["params"];
    for (const auto& [key, value] : doc.items()) {
      if (key == "fixture" || key == "form") continue;
      if (!value.is_string()) throw UsageError("fixture value for '" + key + "' must be an \"n/d\" string");
      out[key] = Rational::parse(value.get<std::string>());
    }
  }
  for (const auto& [key, value] : c.params) {
    if (!value.empty()) out[key] = Rational::parse(value);
  }
  return out;
}

Rational get(const catalog::EntryParams& p, const std::string& key, const Rational& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

markov::QParams qparams(const catalog::EntryParams& p) {
  markov::QParams q{get(p, "a", Rational(1, 3)), get(p, "b", Rational(1, 5)), get(p, "c", Rational(1, 7)),
                    get(p, "d", Rational(1, 11)), get(p, "q", Rational(1, 2))};
  const Rational aq = q.q.abs();
  if (q.q.is_zero() || aq >= 1) throw UsageError("|q| must satisfy 0 < |q| < 1, got q = " + q.q.str());
  return q;
}

std::pair<index_t, index_t> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  auto count = [&](const std::string& part) -> index_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("grid must look like NxM, got '" + s + "'");
    }
    const index_t v = std::stoull(part);
    if (v < 1) throw UsageError("grid sides must be at least 1");
    return v;
  };
  if (x == std::string::npos) throw UsageError("grid must look like NxM, got '" + s + "'");
  return {count(s.substr(0, x)), count(s.substr(x + 1))};
}

void add_param_flags(CLI::App* sub, Common& c, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    sub->add_option("--" + n, c.params[n], "parameter " + n + " as n/d");
  }
}

void add_common_flags(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "text, json or csv (default: $MARKOVWZ_FORMAT or text)");
  sub->add_option("--output", c.output, "write to this file instead of standard output");
}

// Writes to --output when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------------------
// Check reports shared by verify-pair, verify-certificate and solve

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

void print_checks(std::ostream& os, Format f, const std::string& command, const std::string& subject,
                  const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  switch (f) {
    case Format::text:
      os << command << " " << subject << "\n";
      for (const auto& c : checks) {
        os << "  " << pad(c.name, 30) << " " << (c.passed ? "pass" : "FAIL");
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
      }
      os << "result: " << (all ? "pass" : "FAIL") << "\n";
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      json doc{{"schema", catalog::kReportSchema},
               {"command", command},
               {"subject", subject},
               {"checks", arr},
               {"passed", all}};
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "schema,command,check,passed,detail\n";
      auto q = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string o = "\"";
        for (char ch : s) {
          if (ch == '"') o += '"';
          o += ch;
        }
        return o + "\"";
      };
      for (const auto& c : checks) {
        os << catalog::kReportSchema << "," << command << "," << q(c.name) << "," << (c.passed ? "true" : "false")
           << "," << q(c.detail) << "\n";
      }
      break;
    }
  }
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string qparam_subject(const markov::QParams& p, const Rational& t) {
  return "a=" + p.a.str() + " b=" + p.b.str() + " c=" + p.c.str() + " d=" + p.d.str() + " q=" + p.q.str() +
         " t=" + t.str();
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
  Common common;
  std::string id;
  std::size_t digits = 30;
  std::string rounding = "half-even";
  index_t terms = 0;
  index_t direct_terms = 200;
  std::string tail = "euler-maclaurin";
};

void print_report_text(std::ostream& os, const EvaluationReport& r) {
  os << "id            " << r.id << "\n";
  os << "constant      " << r.constant << "\n";
  os << "terms         " << r.terms_used << "\n";
  os << "ratio bound   " << (r.ratio_bound ? r.ratio_bound->str() : std::string("none")) << "\n";
  os << "rounding      " << to_string(r.rendering.rounding) << "\n";
  os << "digits proven " << r.digits_proven << "\n";
  os << "value         " << r.rendering.str() << "\n";
}

void print_reports(std::ostream& os, Format f, const std::vector<EvaluationReport>& reports) {
  std::vector<ReportRecord> recs;
  for (const auto& r : reports) recs.push_back(catalog::to_record(r));
  if (f == Format::json) {
    os << catalog::records_to_json(recs);
  } else if (f == Format::csv) {
    os << catalog::records_to_csv(recs);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) os << "\n";
      print_report_text(os, reports[i]);
    }
  }
}

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  const Format f = resolve_format(o.common);
  const Rounding rounding = parse_rounding(o.rounding);
  if (o.digits < 1) throw UsageError("--digits must be at least 1");
  const FormulaEntry entry =
      catalog::make_entry(o.id, collect_params(o.common), catalog::parse_direct_tail(o.tail));

  index_t n = o.terms;
  if (n == 0) {
    if (entry.geometric()) {
      try {
        n = catalog::terms_needed(entry, o.digits, rounding);
      } catch (const DomainError& e) {
        err << "markovwz: " << e.what() << "\n";
        return kPrecisionShortfall;
      }
    } else {
      n = o.direct_terms;
    }
  }
  const EvaluationReport r = catalog::evaluate(entry, n, o.digits, rounding);
  Sink sink(o.common.output, out);
  print_reports(sink.stream(), f, {r});
  if (r.digits_proven < o.digits) {
    err << "markovwz: only " << r.digits_proven << " of " << o.digits << " digits proven with " << n
        << " terms";
    if (!entry.geometric()) err << " (" << entry.id << " has no geometric bound; raise --terms)";
    err << "\n";
    return kPrecisionShortfall;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOptions {
  Common common;
  std::string constant;
  std::size_t digits = 30;
  std::string rounding = "half-even";
  index_t direct_terms = 200;
  std::string tail = "euler-maclaurin";
};

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  const Format f = resolve_format(o.common);
  const Rounding rounding = parse_rounding(o.rounding);
  const auto entries = catalog::entries_for_constant(o.constant, catalog::parse_direct_tail(o.tail));

  std::vector<EvaluationReport> reports;
  for (const auto& e : entries) {
    const index_t n = e.geometric() ? catalog::terms_needed(e, o.digits, rounding) : o.direct_terms;
    reports.push_back(catalog::evaluate(e, n, o.digits, rounding));
  }

  Sink sink(o.common.output, out);
  if (f == Format::text) {
    std::ostream& os = sink.stream();
    os << "compare " << o.constant << " to " << o.digits << " digits\n";
    os << pad("id", 18) << pad("terms", 8) << pad("digits", 8) << pad("ratio", 10) << "value\n";
    for (const auto& r : reports) {
      os << pad(r.id, 18) << pad(std::to_string(r.terms_used), 8) << pad(std::to_string(r.digits_proven), 8)
         << pad(r.ratio_bound ? r.ratio_bound->str() : "-", 10) << r.rendering.str() << "\n";
    }
  } else {
    print_reports(sink.stream(), f, reports);
  }

  // Every pair of enclosures must share a point, and the renderings at the
  // smaller proven length must coincide.
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = i + 1; j < reports.size(); ++j) {
      const auto& a = reports[i];
      const auto& b = reports[j];
      const std::size_t m = std::min(a.digits_proven, b.digits_proven);
      const bool meet = a.enclosure.intersects(b.enclosure);
      const bool same = m == 0 || to_decimal(a.enclosure, m, rounding).str() ==
                                      to_decimal(b.enclosure, m, rounding).str();
      if (!meet || !same) {
        err << "markovwz: " << a.id << " and " << b.id << " disagree within " << m << " proven digits\n";
        return kDisagreement;
      }
    }
  }
  for (const auto& r : reports) {
    if (r.digits_proven < o.digits) {
      err << "markovwz: " << r.id << " proved only " << r.digits_proven << " of " << o.digits << " digits\n";
      return kPrecisionShortfall;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify-pair

struct VerifyPairOptions {
  Common common;
  std::string family;
  std::string grid = "20x20";
  std::vector<std::string> rects;
  bool fuzz = false;
};

std::vector<std::pair<index_t, index_t>> rectangles(const std::vector<std::string>& specs) {
  std::vector<std::pair<index_t, index_t>> out;
  if (specs.empty()) {
    for (index_t i : {1, 5, 10, 20}) {
      for (index_t j : {1, 5, 10, 20}) out.emplace_back(i, j);
    }
    return out;
  }
  for (const auto& s : specs) out.push_back(parse_grid(s));
  return out;
}

std::vector<Check> pair_checks(const markov::MarkovPair& pair, index_t nx, index_t nz,
                               const std::vector<std::pair<index_t, index_t>>& rects) {
  std::vector<Check> checks;
  const auto v = markov::check_pair_grid(pair, nx - 1, nz - 1);
  Check g{"pair condition " + std::to_string(nx) + "x" + std::to_string(nz), v.holds, ""};
  g.detail = std::to_string(v.points_checked) + " points";
  if (v.first_failure) {
    g.detail += "; residual " + v.residual.str() + " at (x,z) = (" + std::to_string(v.first_failure->first) +
                "," + std::to_string(v.first_failure->second) + ")";
  }
  checks.push_back(std::move(g));
  for (const auto& [i, j] : rects) {
    const auto s = markov::green_rectangle(pair, i, j);
    Check c{"green rectangle " + std::to_string(i) + "x" + std::to_string(j), s.lhs == s.rhs, ""};
    if (!c.passed) c.detail = "lhs - rhs = " + (s.lhs - s.rhs).str();
    checks.push_back(std::move(c));
  }
  return checks;
}

int cmd_verify_pair(const VerifyPairOptions& o, std::ostream& out, std::ostream&) {
  const Format f = resolve_format(o.common);
  if (o.family != "3phi2") throw UsageError("unknown pair family '" + o.family + "' (expected 3phi2)");
  const auto [nx, nz] = parse_grid(o.grid);
  const auto rects = rectangles(o.rects);
  const markov::Markov3Phi2 m(qparams(collect_params(o.common)));
  const auto pair = m.pair(o.fuzz ? Rational(1, 1000) : Rational(0));
  const auto checks = pair_checks(pair, nx, nz, rects);
  Sink sink(o.common.output, out);
  std::string subject = "3phi2 " + qparam_subject(m.params(), m.t());
  if (o.fuzz) subject += " (C perturbed by 1/1000)";
  print_checks(sink.stream(), f, "verify-pair", subject, checks);
  return all_passed(checks) ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// verify-certificate

struct VerifyCertificateOptions {
  Common common;
  std::string family = "3phi2";
  std::string grid = "20x20";
  std::uint64_t seed = 0;
  std::size_t random_points = 50;
};

int cmd_verify_certificate(const VerifyCertificateOptions& o, std::ostream& out, std::ostream&) {
  const Format f = resolve_format(o.common);
  if (o.family != "3phi2") throw UsageError("unknown certificate family '" + o.family + "' (expected 3phi2)");
  const auto [nx, nz] = parse_grid(o.grid);
  const markov::QParams p = qparams(collect_params(o.common));
  const markov::Markov3Phi2 m(p);
  const auto family = markov::markov_3phi2_certificate_family();
  const std::vector<Rational> params{p.a, p.b, p.c, p.d, p.q};

  std::vector<Check> checks;
  const auto v = markov::verify_certificate(family, params, nx - 1, nz - 1, o.random_points, o.seed);
  Check c{"certificate identity", v.passed,
          std::to_string(v.points_checked) + " points, " + std::to_string(o.random_points) +
              " random instantiations, seed " + std::to_string(o.seed)};
  if (v.first_failure) {
    std::string ps;
    for (const auto& r : v.first_failure->params) ps += (ps.empty() ? "" : ",") + r.str();
    c.detail += "; residual " + v.first_failure->residual.str() + " at (x,z) = (" +
                std::to_string(v.first_failure->x) + "," + std::to_string(v.first_failure->z) + ") params (" +
                ps + ")";
  }
  checks.push_back(std::move(c));

  // The pair built from the certificate against the closed forms.
  const index_t x_cap = nx - 1;
  const auto A = markov::certificate_multipliers(m.certificate(), x_cap);
  const auto pair = markov::pair_from_certificate(m.certificate(), x_cap);
  Check a{"A(x) closed form, x <= " + std::to_string(x_cap), true, ""};
  Check m0{"M(x,0) closed form, x <= " + std::to_string(x_cap), true, ""};
  for (index_t x = 0; x <= x_cap; ++x) {
    if (a.passed && A[x] != m.A(x)) {
      a.passed = false;
      a.detail = "first mismatch at x = " + std::to_string(x);
    }
    const Rational f0 = m.F(x, 0);
    if (m0.passed && pair.V(x, 0) != m.M0(x) * f0) {
      m0.passed = false;
      m0.detail = "first mismatch at x = " + std::to_string(x);
    }
  }
  checks.push_back(std::move(a));
  checks.push_back(std::move(m0));

  Sink sink(o.common.output, out);
  print_checks(sink.stream(), f, "verify-certificate", "3phi2 " + qparam_subject(p, m.t()), checks);
  return all_passed(checks) ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  Common common;
  std::string family;
  std::string form;
  index_t x_max = 10;
  index_t z_samples = 0;
};

void print_multipliers(std::ostream& os, Format f, const std::string& subject, const markov::MultiplierData& d) {
  auto coeff_list = [](const std::vector<Rational>& v) {
    std::string s;
    for (const auto& r : v) s += (s.empty() ? "" : ", ") + r.str();
    return s;
  };
  switch (f) {
    case Format::text:
      os << "solve " << subject << " form " << to_string(d.form) << "\n";
      for (index_t x = 0; x <= d.x_max(); ++x) {
        os << "  x=" << x << "  U: [" << coeff_list(d.u_coeffs[x]) << "]  M: [" << coeff_list(d.m_coeffs[x])
           << "]\n";
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (index_t x = 0; x <= d.x_max(); ++x) {
        json u = json::array();
        json mm = json::array();
        for (const auto& r : d.u_coeffs[x]) u.push_back(r.str());
        for (const auto& r : d.m_coeffs[x]) mm.push_back(r.str());
        rows.push_back({{"x", x}, {"U", u}, {"M", mm}});
      }
      os << json{{"schema", catalog::kReportSchema},
                 {"command", "solve"},
                 {"subject", subject},
                 {"form", to_string(d.form)},
                 {"multipliers", rows}}
                .dump(2)
         << "\n";
      break;
    }
    case Format::csv:
      os << "schema,x,multiplier,k,value\n";
      for (index_t x = 0; x <= d.x_max(); ++x) {
        for (std::size_t k = 0; k < d.u_coeffs[x].size(); ++k) {
          os << catalog::kReportSchema << "," << x << ",U," << k << "," << d.u_coeffs[x][k].str() << "\n";
        }
        for (std::size_t k = 0; k < d.m_coeffs[x].size(); ++k) {
          os << catalog::kReportSchema << "," << x << ",M," << k << "," << d.m_coeffs[x][k].str() << "\n";
        }
      }
      break;
  }
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const Format f = resolve_format(o.common);
  const auto params = collect_params(o.common);
  markov::TermExtension ext;
  markov::MultiplierForm form;
  std::optional<markov::Markov3Phi2> closed;
  std::string subject;
  if (o.family == "3phi2-u1") {
    closed.emplace(qparams(params));
    ext = closed->extension();
    form = markov::MultiplierForm::u1;
    subject = "3phi2 " + qparam_subject(closed->params(), closed->t());
  } else if (o.family == "4f3-u2") {
    const Rational a = get(params, "a", 1), h = get(params, "h", 0), b = get(params, "b", 2);
    ext = markov::hg_extension_4f3(a, h, b);
    form = markov::MultiplierForm::u2;
    subject = "4f3 a=" + a.str() + " h=" + h.str() + " b=" + b.str();
  } else if (o.family == "4f3alt-u3") {
    const Rational a = get(params, "a", 1), b = get(params, "b", 2);
    ext = markov::hg_extension_4f3_alternating(a, b);
    form = markov::MultiplierForm::u3;
    subject = "4f3alt a=" + a.str() + " b=" + b.str();
  } else {
    throw UsageError("unknown solver family '" + o.family + "' (expected 3phi2-u1, 4f3-u2 or 4f3alt-u3)");
  }
  if (!o.form.empty()) form = markov::parse_form(o.form);
  const index_t samples = o.z_samples ? o.z_samples : markov::unknowns_per_step(form) + 4;

  const auto result = markov::solve_multipliers_stepwise(ext, form, o.x_max, samples);
  Sink sink(o.common.output, out);
  if (const auto* fail = std::get_if<markov::SolveFailure>(&result)) {
    print_checks(sink.stream(), f, "solve", subject + " form " + to_string(form),
                 {{"closure", false, fail->reason}});
    err << "markovwz: " << fail->reason << "\n";
    return kVerificationFailed;
  }
  const auto& data = std::get<markov::MultiplierData>(result);
  print_multipliers(sink.stream(), f, subject, data);

  std::vector<Check> checks;
  if (closed && form == markov::MultiplierForm::u1) {
    Check c{"closed forms A, B, C, x <= " + std::to_string(o.x_max), true, ""};
    for (index_t x = 0; x <= o.x_max && c.passed; ++x) {
      const auto& mc = data.m_coeffs[x];
      if (data.A(x) != closed->A(x) || mc[0] != closed->B(x) || mc[1] != closed->C(x)) {
        c.passed = false;
        c.detail = "first mismatch at x = " + std::to_string(x);
      }
    }
    checks.push_back(std::move(c));
  }
  const auto pair = markov::pair_from_multipliers(ext, data);
  const auto v = markov::check_pair_grid(pair, o.x_max, o.x_max);
  checks.push_back({"induced pair " + std::to_string(o.x_max + 1) + "x" + std::to_string(o.x_max + 1), v.holds,
                    std::to_string(v.points_checked) + " points"});
  if (f == Format::text) print_checks(sink.stream(), f, "solve", "checks", checks);
  return all_passed(checks) ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// list

int cmd_list(const Common& c, std::ostream& out) {
  const Format f = resolve_format(c);
  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  const auto& infos = catalog::registry();
  auto params = [](const catalog::EntryInfo& i) {
    std::string s;
    for (const auto& p : i.parameters) s += (s.empty() ? "" : " ") + p;
    return s;
  };
  switch (f) {
    case Format::text:
      for (const auto& i : infos) {
        os << pad(i.id, 18) << pad(i.constant_key.empty() ? "-" : i.constant_key, 7)
           << pad(params(i).empty() ? "-" : params(i), 12) << i.summary << "\n";
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& i : infos) {
        arr.push_back({{"id", i.id}, {"constant", i.constant_key}, {"parameters", i.parameters},
                       {"summary", i.summary}});
      }
      os << json{{"schema", catalog::kReportSchema}, {"entries", arr}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "schema,id,constant,parameters,summary\n";
      for (const auto& i : infos) {
        std::string summary = i.summary;
        if (summary.find(',') != std::string::npos) summary = "\"" + summary + "\"";
        os << catalog::kReportSchema << "," << i.id << "," << i.constant_key << "," << params(i) << ","
           << summary << "\n";
      }
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact series transformations and certified constants", "markovwz"};
  app.require_subcommand(1, 1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "evaluate a catalog entry to certified digits");
  c->add_option("id", compute.id, "formula id (see list)")->required();
  c->add_option("--digits", compute.digits, "digits to certify (default 30)");
  c->add_option("--rounding", compute.rounding, "half-even or truncate");
  c->add_option("--terms", compute.terms, "fixed number of terms instead of the search");
  c->add_option("--direct-terms", compute.direct_terms, "terms for entries without a geometric bound");
  c->add_option("--tail", compute.tail, "tail bound for direct entries: euler-maclaurin or integral");
  c->add_option("--fixture", compute.common.fixture, "JSON object of parameter strings");
  add_param_flags(c, compute.common, {"a", "b", "c", "d", "q"});
  add_common_flags(c, compute.common);

  CompareOptions compare;
  auto* cmp = app.add_subcommand("compare", "evaluate every formula for a constant and cross-check");
  cmp->add_option("constant", compare.constant, "zeta2 or zeta3")->required();
  cmp->add_option("--digits", compare.digits, "digits to certify (default 30)");
  cmp->add_option("--rounding", compare.rounding, "half-even or truncate");
  cmp->add_option("--direct-terms", compare.direct_terms, "terms for direct summation rows");
  cmp->add_option("--tail", compare.tail, "tail bound for direct rows");
  add_common_flags(cmp, compare.common);

  VerifyPairOptions vp;
  auto* pv = app.add_subcommand("verify-pair", "check the pair condition and rectangle identities");
  pv->add_option("family", vp.family, "pair family: 3phi2")->required();
  pv->add_option("--grid", vp.grid, "grid NxM for the pair condition (default 20x20)");
  pv->add_option("--rect", vp.rects, "rectangle IxJ for the Green identity (repeatable)");
  pv->add_flag("--fuzz", vp.fuzz, "perturb C(x) by 1/1000; the checks must then fail");
  pv->add_option("--fixture", vp.common.fixture, "JSON object of parameter strings");
  add_param_flags(pv, vp.common, {"a", "b", "c", "d", "q"});
  add_common_flags(pv, vp.common);

  VerifyCertificateOptions vc;
  auto* cv = app.add_subcommand("verify-certificate", "check the certificate identity and its pair");
  cv->add_option("family", vc.family, "certificate family: 3phi2");
  cv->add_option("--grid", vc.grid, "grid NxM (default 20x20)");
  cv->add_option("--seed", vc.seed, "seed for random instantiations (default 0)");
  cv->add_option("--random-points", vc.random_points, "random instantiations (default 50)");
  cv->add_option("--fixture", vc.common.fixture, "JSON object of parameter strings");
  add_param_flags(cv, vc.common, {"a", "b", "c", "d", "q"});
  add_common_flags(cv, vc.common);

  SolveOptions so;
  auto* sv = app.add_subcommand("solve", "solve for multipliers step by step");
  sv->add_option("family", so.family, "3phi2-u1, 4f3-u2 or 4f3alt-u3")->required();
  sv->add_option("--form", so.form, "override the ansatz: u1, u2 or u3");
  sv->add_option("--x-max", so.x_max, "last step (default 10)");
  sv->add_option("--z-samples", so.z_samples, "z samples per step (default unknowns + 4)");
  sv->add_option("--fixture", so.common.fixture, "JSON object of parameter strings");
  add_param_flags(sv, so.common, {"a", "b", "c", "d", "q"});
  sv->add_option("--shift", so.common.params["h"], "4f3 parameter h as n/d");
  add_common_flags(sv, so.common);

  Common list_opts;
  auto* ls = app.add_subcommand("list", "list catalog entries");
  add_common_flags(ls, list_opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "markovwz: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out, err);
    if (*cmp) return cmd_compare(compare, out, err);
    if (*pv) return cmd_verify_pair(vp, out, err);
    if (*cv) return cmd_verify_certificate(vc, out, err);
    if (*sv) return cmd_solve(so, out, err);
    if (*ls) return cmd_list(list_opts, out);
  } catch (const EvaluationError& e) {
    err << "markovwz: " << e.what() << "\n";
    return kSingular;
  } catch (const DivisionByZero& e) {
    err << "markovwz: " << e.what() << "\n";
    return kSingular;
  } catch (const std::invalid_argument& e) {
    err << "markovwz: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace markovwz::cli
