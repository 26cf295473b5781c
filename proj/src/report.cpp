#include "hpsphere/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hpsphere {

using nlohmann::json;

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

// Round to 12 significant digits so serialized and re-parsed documents agree.
double round12(double value) { return std::stod(format_number(value)); }

json number_or_null(const std::optional<double>& v) {
  if (!v) return nullptr;
  return round12(*v);
}

std::optional<double> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportDocument classification_document(int n) {
  ReportDocument doc;
  doc.command = "classify";
  for (const FamilyDescriptor& f : enumerate_families(n)) {
    ReportRow row;
    row.kind = family_kind_name(f.kind);
    row.params = f.params_string();
    row.K_closed = f.curvature;
    row.pass = true;
    doc.families.push_back(row);
  }
  return doc;
}

ReportDocument verification_document(const std::vector<VerificationReport>& reports) {
  ReportDocument doc;
  doc.command = "verify";
  for (const VerificationReport& r : reports) {
    ReportRow row;
    row.kind = r.kind;
    row.params = r.params;
    row.K_closed = r.report.K_closed;
    row.K_numeric_mean = r.report.K_numeric_mean;
    row.K_numeric_std = r.report.K_numeric_std;
    row.minimality_residual = r.report.minimality_residual;
    row.conformality_residual = r.report.conformality_residual;
    row.pass = r.pass;
    doc.families.push_back(row);
  }
  return doc;
}

ReportDocument reptest_document(const std::vector<RepCheck>& checks) {
  ReportDocument doc;
  doc.command = "rep-test";
  doc.checks = checks;
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["families"] = json::array();
  for (const ReportRow& r : doc.families) {
    json row;
    row["kind"] = r.kind;
    row["params"] = r.params;
    row["K_closed"] = round12(r.K_closed);
    row["K_numeric_mean"] = number_or_null(r.K_numeric_mean);
    row["K_numeric_std"] = number_or_null(r.K_numeric_std);
    row["minimality_residual"] = number_or_null(r.minimality_residual);
    row["conformality_residual"] = number_or_null(r.conformality_residual);
    row["pass"] = r.pass;
    j["families"].push_back(row);
  }
  j["checks"] = json::array();
  for (const RepCheck& c : doc.checks) {
    json row;
    row["check"] = c.name;
    row["n_max"] = c.n_max;
    row["max_residual"] = round12(c.max_residual);
    row["tolerance"] = round12(c.tolerance);
    row["pass"] = c.pass;
    j["checks"].push_back(row);
  }
  return j.dump(2) + "\n";
}

ReportDocument from_json(const std::string& text) {
  const json j = json::parse(text);
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  for (const json& row : j.at("families")) {
    ReportRow r;
    r.kind = row.at("kind").get<std::string>();
    r.params = row.at("params").get<std::string>();
    r.K_closed = row.at("K_closed").get<double>();
    r.K_numeric_mean = optional_from(row.at("K_numeric_mean"));
    r.K_numeric_std = optional_from(row.at("K_numeric_std"));
    r.minimality_residual = optional_from(row.at("minimality_residual"));
    r.conformality_residual = optional_from(row.at("conformality_residual"));
    r.pass = row.at("pass").get<bool>();
    doc.families.push_back(r);
  }
  for (const json& row : j.at("checks")) {
    RepCheck c;
    c.name = row.at("check").get<std::string>();
    c.n_max = row.at("n_max").get<int>();
    c.max_residual = row.at("max_residual").get<double>();
    c.tolerance = row.at("tolerance").get<double>();
    c.pass = row.at("pass").get<bool>();
    doc.checks.push_back(c);
  }
  return doc;
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.command == "rep-test") {
    os << "check,n_max,max_residual,tolerance,pass\n";
    for (const RepCheck& c : doc.checks)
      os << csv_escape(c.name) << ',' << c.n_max << ',' << format_number(c.max_residual) << ','
         << format_number(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
    return os.str();
  }
  os << "kind,params,K_closed,K_numeric_mean,K_numeric_std,minimality_residual,"
        "conformality_residual,pass\n";
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  for (const ReportRow& r : doc.families)
    os << csv_escape(r.kind) << ',' << csv_escape(r.params) << ',' << format_number(r.K_closed)
       << ',' << cell(r.K_numeric_mean) << ',' << cell(r.K_numeric_std) << ','
       << cell(r.minimality_residual) << ',' << cell(r.conformality_residual) << ','
       << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string to_markdown(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.command == "rep-test") {
    os << "| check | n_max | max_residual | tolerance | pass |\n";
    os << "|---|---|---|---|---|\n";
    for (const RepCheck& c : doc.checks)
      os << "| " << c.name << " | " << c.n_max << " | " << format_number(c.max_residual) << " | "
         << format_number(c.tolerance) << " | " << (c.pass ? "true" : "false") << " |\n";
    return os.str();
  }
  os << "| kind | params | K_closed | K_numeric_mean | K_numeric_std | minimality_residual | "
        "conformality_residual | pass |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("-");
  };
  for (const ReportRow& r : doc.families)
    os << "| " << r.kind << " | " << (r.params.empty() ? "-" : r.params) << " | "
       << format_number(r.K_closed) << " | " << cell(r.K_numeric_mean) << " | "
       << cell(r.K_numeric_std) << " | " << cell(r.minimality_residual) << " | "
       << cell(r.conformality_residual) << " | " << (r.pass ? "true" : "false") << " |\n";
  return os.str();
}

std::string render(const ReportDocument& doc, const std::string& format) {
  if (format == "json") return to_json(doc);
  if (format == "csv") return to_csv(doc);
  if (format == "md") return to_markdown(doc);
  throw std::invalid_argument("unknown format: " + format);
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known)
      throw std::invalid_argument("orbit spec: unknown field \"" + item.key() + "\" in " + where);
  }
}

}  // namespace

BasePoint load_orbit_spec(const std::string& text, std::string* warn) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("orbit spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("orbit spec: top level must be an object");
  reject_unknown_keys(j, {"n", "lambda", "blocks"}, "top level");
  const int n = j.at("n").get<int>();
  const int lambda = j.at("lambda").get<int>();
  std::vector<int> ms;
  std::vector<Complex> cs;
  double norm2 = 0.0;
  for (const json& blk : j.at("blocks")) {
    if (!blk.is_object()) throw std::invalid_argument("orbit spec: blocks must be objects");
    reject_unknown_keys(blk, {"m", "c_re", "c_im"}, "block");
    ms.push_back(blk.at("m").get<int>());
    const Complex c(blk.at("c_re").get<double>(), blk.at("c_im").get<double>());
    cs.push_back(c);
    norm2 += std::norm(c);
  }
  int total = 0;
  for (int m : ms) total += m;
  if (total != n + 1)
    throw std::invalid_argument("orbit spec: block sizes must sum to n+1");
  if (warn != nullptr && std::abs(norm2 - 1.0) > 1e-12) {
    *warn = "orbit spec: |z|^2 = " + format_number(norm2) + "; normalizing";
  }
  return BasePoint(RepSum(ms), lambda, cs);
}

}  // namespace hpsphere
