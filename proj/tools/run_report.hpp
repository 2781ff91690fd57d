#pragma once

// RunReport: the record every pfes command emits, with its JSON, plain and
// LaTeX renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfes/qcore.hpp"
#include "pfes/report.hpp"

namespace pfes::cli {

inline constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

enum class Format { plain, latex, json };

/// One line of a report. Compute results carry `value`; verify results carry
/// lhs/rhs and a status; oracle results carry count/symbolic and a status.
struct Entry {
  std::string name;
  std::vector<long> point;
  std::optional<QRational> value;
  std::optional<QRational> lhs;
  std::optional<QRational> rhs;
  std::optional<mpz_class> count;
  std::optional<mpz_class> symbolic;
  std::string status;
  std::string note;
};

struct RunReport {
  std::string command;
  json parameters = json::object();
  std::vector<Entry> results;
  std::int64_t timing_ms = 0;
  std::optional<std::pair<std::string, std::string>> error;  // kind, message
};

// ---- JSON ----

inline json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(std::to_string(j.get<std::int64_t>()));
}

inline json poly_json(const QPoly& p) {
  json cs = json::array();
  for (const auto& c : p.coeffs()) cs.push_back(integer_json(c));
  return json{{"var", "q"}, {"coeffs", std::move(cs)}};
}

inline QPoly poly_from_json(const json& j) {
  std::vector<QPoly::Coeff> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(integer_from_json(c));
  return QPoly(std::move(cs));
}

/// Polynomials stay bare; proper fractions become {"num", "den"}.
inline json value_json(const QRational& r) {
  if (r.den().is_one()) return poly_json(r.num());
  return json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}};
}

inline QRational value_from_json(const json& j) {
  if (j.contains("num")) return QRational(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
  return QRational(poly_from_json(j));
}

inline json entry_json(const Entry& e) {
  json j = json::object();
  j["name"] = e.name;
  if (!e.point.empty()) j["point"] = e.point;
  if (e.value) j["value"] = value_json(*e.value);
  if (e.lhs) j["lhs"] = value_json(*e.lhs);
  if (e.rhs) j["rhs"] = value_json(*e.rhs);
  if (e.count) j["count"] = integer_json(*e.count);
  if (e.symbolic) j["symbolic"] = integer_json(*e.symbolic);
  if (!e.status.empty()) {
    j["status"] = e.status;
    j["passed"] = e.status != "FAIL" && e.status != "MISMATCH";
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

struct Tally {
  long points = 0, passed = 0, failed = 0, skipped = 0, expected = 0;
};

inline Tally tally(const std::vector<Entry>& es) {
  Tally t;
  for (const auto& e : es) {
    if (e.status.empty()) continue;
    ++t.points;
    if (e.status == "PASS" || e.status == "MATCH") ++t.passed;
    else if (e.status == "EXPECTED") ++t.expected;
    else if (e.status == "SKIP") ++t.skipped;
    else ++t.failed;
  }
  return t;
}

inline json report_json(const RunReport& r) {
  json j = json::object();
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  json results = json::array();
  for (const auto& e : r.results) results.push_back(entry_json(e));
  j["results"] = std::move(results);
  if (r.command == "verify" || r.command == "oracle") {
    const Tally t = tally(r.results);
    j["summary"] = {{"points", t.points}, {"passed", t.passed}, {"failed", t.failed},
                    {"skipped", t.skipped}, {"expected", t.expected}};
  }
  if (r.error) j["error"] = {{"kind", r.error->first}, {"message", r.error->second}};
  j["timing_ms"] = r.timing_ms;
  j["version"] = kVersion;
  return j;
}

// ---- text ----

inline std::string point_text(const std::vector<long>& pt) {
  std::string s = "[";
  for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + std::to_string(pt[i]);
  return s + "]";
}

inline std::string render_text(const RunReport& r, Format f, bool show_timing) {
  const Notation style = f == Format::latex ? Notation::latex : Notation::plain;
  std::string out;
  if (r.error) {
    return "error: " + r.error->first + ": " + r.error->second + "\n";
  }
  if (r.command == "compute") {
    for (const auto& e : r.results) out += render(*e.value, style) + "\n";
  } else if (r.command == "oracle") {
    for (const auto& e : r.results) {
      out += "count " + e.count->get_str() + "\n";
      out += "symbolic " + e.symbolic->get_str() + "\n";
      out += e.status + "\n";
    }
  } else {
    std::string suite;
    for (const auto& e : r.results) {
      out += "[" + e.status + "] " + e.name + " " + point_text(e.point);
      if (f == Format::latex && e.lhs && e.rhs) {
        out += ": $" + render(*e.lhs, style) + "$ vs $" + render(*e.rhs, style) + "$";
      }
      if (!e.note.empty()) out += " (" + e.note + ")";
      out += "\n";
    }
    const Tally t = tally(r.results);
    out += std::to_string(t.points) + " points, " + std::to_string(t.passed) + " passed, " +
           std::to_string(t.failed) + " failed, " + std::to_string(t.skipped) + " skipped, " +
           std::to_string(t.expected) + " expected\n";
  }
  if (show_timing) out += "time " + std::to_string(r.timing_ms) + " ms\n";
  return out;
}

inline std::string emit(const RunReport& r, Format f, bool show_timing) {
  if (f == Format::json) return report_json(r).dump(2) + "\n";
  return render_text(r, f, show_timing);
}

inline Entry verify_entry(const IdentityReport& rep) {
  Entry e;
  e.name = rep.identity_name;
  e.point = rep.parameter_point;
  e.note = rep.note;
  if (rep.skipped) {
    e.status = "SKIP";
    return e;
  }
  e.lhs = rep.lhs;
  e.rhs = rep.rhs;
  if (!rep.passed) e.status = "FAIL";
  else if (!rep.expect_equal || !rep.note.empty()) e.status = "EXPECTED";
  else e.status = "PASS";
  return e;
}

}  // namespace pfes::cli
