// gaussfit: evaluates the Laplace-Beltrami operator on the Gauss map of
// built-in surface patches and fits the best constant matrix Lambda in
// L n = Lambda n, reporting how well the surface satisfies the condition.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gaussfit/classifier.hpp"
#include "gaussfit/report.hpp"

namespace {

using gaussfit::Grid;
using gaussfit::ParamRange;

// "start:stop:count" or a bare number (count-1 range).
ParamRange parse_range(const std::string& text, const std::string& name) {
  ParamRange range;
  const auto first = text.find(':');
  if (first == std::string::npos) {
    try {
      range.start = std::stod(text);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--" + name, "expected a number, got '" +
                                                  text + "'");
    }
    range.stop = range.start;
    range.count = 1;
    return range;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos)
    throw CLI::ValidationError(
        "--" + name, "range must be start:stop:count, got '" + text + "'");
  try {
    range.start = std::stod(text.substr(0, first));
    range.stop = std::stod(text.substr(first + 1, second - first - 1));
    range.count = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError(
        "--" + name, "range must be start:stop:count, got '" + text + "'");
  }
  if (range.count < 1)
    throw CLI::ValidationError("--" + name, "range count must be >= 1");
  return range;
}

double parse_value(const std::string& text, const std::string& name) {
  const ParamRange range = parse_range(text, name);
  if (range.count != 1)
    throw CLI::ValidationError("--" + name,
                               "ranges are only accepted by 'sweep'");
  return range.start;
}

Grid parse_grid(const std::string& text) {
  Grid grid;
  if (std::sscanf(text.c_str(), "%dx%d", &grid.m, &grid.k) != 2 ||
      grid.m < 1 || grid.k < 1)
    throw CLI::ValidationError("--grid", "expected MxK, got '" + text + "'");
  return grid;
}

struct CommonArgs {
  std::string surface;
  std::map<std::string, std::string> raw_params;  // only flags the user set
  std::string grid_text = "32x32";
  double tol = gaussfit::kDefaultTolerance;
  std::string format = "json";
};

void add_common_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--surface", args.surface, "surface tag")->required();
  for (const char* name : {"r", "a", "R", "p", "rho"}) {
    cmd.add_option_function<std::string>(
        std::string("--") + name,
        [&args, name = std::string(name)](const std::string& value) {
          args.raw_params[name] = value;
        },
        std::string("surface parameter ") + name);
  }
  cmd.add_option("--grid", args.grid_text, "sample grid, MxK");
  cmd.add_option("--tol", args.tol, "classification tolerance");
  cmd.add_option("--format", args.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::map<std::string, double> scalar_params(const CommonArgs& args) {
  std::map<std::string, double> params;
  for (const auto& [name, text] : args.raw_params)
    params[name] = parse_value(text, name);
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gauss map analysis of parametric surface patches: fits L n = Lambda n "
      "and audits closed-form operators against the metric-derived one"};
  app.require_subcommand(1);

  CommonArgs classify_args, audit_args, sweep_args;
  CLI::App* classify =
      app.add_subcommand("classify", "fit Lambda and report a verdict");
  add_common_options(*classify, classify_args);
  CLI::App* audit = app.add_subcommand(
      "audit", "classify plus closed-form and Takahashi-identity checks");
  add_common_options(*audit, audit_args);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "classify across parameter ranges (start:stop:count)");
  add_common_options(*sweep, sweep_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      if (classify_args.format == "csv")
        throw std::invalid_argument("classify only emits json");
      const gaussfit::RunReport report = gaussfit::run_classify(
          classify_args.surface, scalar_params(classify_args),
          parse_grid(classify_args.grid_text), classify_args.tol);
      std::cout << gaussfit::to_json(report) << "\n";
    } else if (audit->parsed()) {
      if (audit_args.format == "csv")
        throw std::invalid_argument("audit only emits json");
      const gaussfit::RunReport report = gaussfit::run_audit(
          audit_args.surface, scalar_params(audit_args),
          parse_grid(audit_args.grid_text), audit_args.tol);
      std::cout << gaussfit::to_json(report) << "\n";
    } else {
      std::map<std::string, ParamRange> ranges;
      for (const auto& [name, text] : sweep_args.raw_params)
        ranges[name] = parse_range(text, name);
      const gaussfit::SweepTable table =
          gaussfit::run_sweep(sweep_args.surface, ranges,
                              parse_grid(sweep_args.grid_text), sweep_args.tol);
      for (const auto& note : table.notes) std::cerr << note << "\n";
      if (sweep_args.format == "csv")
        std::cout << gaussfit::sweep_to_csv(table);
      else
        std::cout << gaussfit::sweep_to_json(table) << "\n";
    }
  } catch (const CLI::Error& error) {
    std::cerr << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "gaussfit: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
