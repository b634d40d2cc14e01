#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gaussfit/classifier.hpp"
#include "gaussfit/operators.hpp"

namespace gaussfit {

inline constexpr const char* kVersion = "1.0.0";

// Flat result record emitted by the command-line tool.  classify runs leave
// the audit list empty; audit runs fill it (closed-form findings plus the
// takahashi_identity row).
struct RunReport {
  std::string surface;
  std::map<std::string, double> params;
  int grid_m = 0;
  int grid_k = 0;
  double tol = 0.0;
  std::array<double, 9> lambda{};  // row-major
  double rms_residual = 0.0;
  std::string verdict;
  std::vector<AuditFinding> audit;
  std::string version = kVersion;
};

bool operator==(const RunReport& a, const RunReport& b);

// Deterministic JSON encoding: fixed key order, params sorted by name,
// numbers printed with 17 significant digits so they parse back exactly.
std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

// One row per parameter combination; parameters without a value for the
// surface stay empty.
std::string sweep_to_csv(const SweepTable& table);
std::string sweep_to_json(const SweepTable& table);

RunReport run_classify(const std::string& tag,
                       const std::map<std::string, double>& params,
                       const Grid& grid = kDefaultGrid,
                       double tolerance = kDefaultTolerance);

RunReport run_audit(const std::string& tag,
                    const std::map<std::string, double>& params,
                    const Grid& grid = kDefaultGrid,
                    double tolerance = kDefaultTolerance);

SweepTable run_sweep(const std::string& tag,
                     const std::map<std::string, ParamRange>& ranges,
                     const Grid& grid = kDefaultGrid,
                     double tolerance = kDefaultTolerance);

}  // namespace gaussfit
