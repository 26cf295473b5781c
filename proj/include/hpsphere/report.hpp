#ifndef HPSPHERE_REPORT_HPP
#define HPSPHERE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hpsphere/classifier.hpp"
#include "hpsphere/reptest.hpp"

namespace hpsphere {

/// One row of the families table.  Numeric-verification fields are empty for
/// pure enumeration output.
struct ReportRow {
  std::string kind;
  std::string params;
  double K_closed = 0.0;
  std::optional<double> K_numeric_mean;
  std::optional<double> K_numeric_std;
  std::optional<double> minimality_residual;
  std::optional<double> conformality_residual;
  bool pass = true;
};

struct ReportDocument {
  std::string schema_version = "1";
  std::string command;
  std::vector<ReportRow> families;
  std::vector<RepCheck> checks;  // rep-test rows; empty otherwise
};

ReportDocument classification_document(int n);
ReportDocument verification_document(const std::vector<VerificationReport>& reports);
ReportDocument reptest_document(const std::vector<RepCheck>& checks);

/// Format with 12 significant digits.
std::string format_number(double value);

std::string to_json(const ReportDocument& doc);
ReportDocument from_json(const std::string& text);
std::string to_csv(const ReportDocument& doc);
std::string to_markdown(const ReportDocument& doc);
std::string render(const ReportDocument& doc, const std::string& format);

/// Orbit description file: UTF-8 JSON {"n":int, "lambda":int,
/// "blocks":[{"m":int, "c_re":real, "c_im":real}, ...]}.  Unknown fields are
/// rejected; the coefficient vector is normalized on load (warning emitted via
/// `warn` when |z| deviates from 1).
BasePoint load_orbit_spec(const std::string& text, std::string* warn);

}  // namespace hpsphere

#endif  // HPSPHERE_REPORT_HPP
