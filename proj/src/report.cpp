#include "gaussfit/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gaussfit {

namespace {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          out += esc;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace

bool operator==(const RunReport& a, const RunReport& b) {
  if (a.surface != b.surface || a.params != b.params || a.grid_m != b.grid_m ||
      a.grid_k != b.grid_k || a.tol != b.tol || a.lambda != b.lambda ||
      a.rms_residual != b.rms_residual || a.verdict != b.verdict ||
      a.version != b.version || a.audit.size() != b.audit.size())
    return false;
  for (std::size_t i = 0; i < a.audit.size(); ++i) {
    if (a.audit[i].formula != b.audit[i].formula ||
        a.audit[i].max_abs_discrepancy != b.audit[i].max_abs_discrepancy)
      return false;
  }
  return true;
}

std::string to_json(const RunReport& report) {
  std::ostringstream out;
  out << "{";
  out << "\"surface\": " << quote(report.surface) << ", ";
  out << "\"params\": {";
  bool first = true;
  for (const auto& [key, value] : report.params) {
    if (!first) out << ", ";
    out << quote(key) << ": " << format_number(value);
    first = false;
  }
  out << "}, ";
  out << "\"grid\": [" << report.grid_m << ", " << report.grid_k << "], ";
  out << "\"tol\": " << format_number(report.tol) << ", ";
  out << "\"lambda\": [";
  for (std::size_t i = 0; i < report.lambda.size(); ++i)
    out << (i ? ", " : "") << format_number(report.lambda[i]);
  out << "], ";
  out << "\"rms_residual\": " << format_number(report.rms_residual) << ", ";
  out << "\"verdict\": " << quote(report.verdict) << ", ";
  out << "\"audit\": [";
  for (std::size_t i = 0; i < report.audit.size(); ++i) {
    out << (i ? ", " : "") << "{\"formula\": " << quote(report.audit[i].formula)
        << ", \"max_abs_discrepancy\": "
        << format_number(report.audit[i].max_abs_discrepancy) << "}";
  }
  out << "], ";
  out << "\"version\": " << quote(report.version);
  out << "}";
  return out.str();
}

RunReport report_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  RunReport report;
  report.surface = doc.at("surface").get<std::string>();
  for (const auto& [key, value] : doc.at("params").items())
    report.params[key] = value.get<double>();
  report.grid_m = doc.at("grid").at(0).get<int>();
  report.grid_k = doc.at("grid").at(1).get<int>();
  report.tol = doc.at("tol").get<double>();
  const auto& lambda = doc.at("lambda");
  if (lambda.size() != report.lambda.size())
    throw std::invalid_argument("report_from_json: lambda must have 9 entries");
  for (std::size_t i = 0; i < report.lambda.size(); ++i)
    report.lambda[i] = lambda.at(i).get<double>();
  report.rms_residual = doc.at("rms_residual").get<double>();
  report.verdict = doc.at("verdict").get<std::string>();
  for (const auto& entry : doc.at("audit")) {
    AuditFinding finding;
    finding.formula = entry.at("formula").get<std::string>();
    finding.max_abs_discrepancy = entry.at("max_abs_discrepancy").get<double>();
    finding.flagged = finding.max_abs_discrepancy > kAuditTolerance;
    report.audit.push_back(finding);
  }
  report.version = doc.at("version").get<std::string>();
  return report;
}

namespace {

const std::array<const char*, 4> kCsvParams = {"a", "r", "R", "p"};

}  // namespace

std::string sweep_to_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "surface,param_a,param_r,param_R,param_p,rms_residual,verdict\n";
  for (const auto& row : table.rows) {
    out << table.surface;
    for (const char* name : kCsvParams) {
      out << ",";
      const auto it = row.params.find(name);
      if (it != row.params.end()) out << format_number(it->second);
    }
    out << "," << format_number(row.rms_residual) << "," << row.verdict
        << "\n";
  }
  return out.str();
}

std::string sweep_to_json(const SweepTable& table) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& row = table.rows[i];
    out << (i ? ", " : "") << "{\"surface\": " << quote(table.surface)
        << ", \"params\": {";
    bool first = true;
    for (const auto& [key, value] : row.params) {
      if (!first) out << ", ";
      out << quote(key) << ": " << format_number(value);
      first = false;
    }
    out << "}, \"rms_residual\": " << format_number(row.rms_residual)
        << ", \"verdict\": " << quote(row.verdict) << "}";
  }
  out << "]";
  return out.str();
}

namespace {

RunReport base_report(const std::string& tag,
                      const std::map<std::string, double>& params,
                      const Grid& grid, double tolerance) {
  const SurfacePatch surface = make_surface(tag, params);
  const Verdict verdict = classify(surface, grid, tolerance);

  RunReport report;
  report.surface = tag;
  report.params = params;
  report.grid_m = grid.m;
  report.grid_k = grid.k;
  report.tol = tolerance;
  const Mat3& lambda = verdict.fit.lambda;
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col)
      report.lambda[static_cast<std::size_t>(3 * row + col)] =
          lambda(row, col);
  report.rms_residual = verdict.fit.rms_residual;
  report.verdict = to_string(verdict.outcome);
  return report;
}

}  // namespace

RunReport run_classify(const std::string& tag,
                       const std::map<std::string, double>& params,
                       const Grid& grid, double tolerance) {
  return base_report(tag, params, grid, tolerance);
}

RunReport run_audit(const std::string& tag,
                    const std::map<std::string, double>& params,
                    const Grid& grid, double tolerance) {
  RunReport report = base_report(tag, params, grid, tolerance);
  const SurfacePatch surface = make_surface(tag, params);
  AuditReport audit = audit_closed_forms(surface, grid);
  const double takahashi = takahashi_residual(surface, grid);
  audit.findings.push_back(
      {"takahashi_identity", takahashi, takahashi > audit.tolerance});
  report.audit = std::move(audit.findings);
  return report;
}

SweepTable run_sweep(const std::string& tag,
                     const std::map<std::string, ParamRange>& ranges,
                     const Grid& grid, double tolerance) {
  return residual_sweep(tag, ranges, grid, tolerance);
}

}  // namespace gaussfit
