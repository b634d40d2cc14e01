#include "gaussfit/classifier.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "gaussfit/parallel.hpp"

namespace gaussfit {

namespace {

struct GridSamples {
  Eigen::MatrixXd design;   // rows: Gauss map vectors n(p)
  Eigen::MatrixXd targets;  // rows: (L n)(p)
  int skipped = 0;
};

GridSamples collect_samples(const SurfacePatch& surface, const Grid& grid) {
  const auto points = grid_points(surface.rect(), grid);
  const std::size_t count = points.size();
  std::vector<Vec3> normals(count), laplacians(count);
  std::vector<char> regular(count, 0);

  parallel_for_index(count, [&](std::size_t i) {
    const auto [t, phi] = points[i];
    try {
      normals[i] = surface.normal(t, phi);
      laplacians[i] = laplace_beltrami_gauss(surface, t, phi);
      regular[i] = 1;
    } catch (const degenerate_point_error&) {
      regular[i] = 0;
    }
  });

  GridSamples out;
  std::size_t used = 0;
  for (char flag : regular) used += static_cast<std::size_t>(flag);
  out.design.resize(static_cast<Eigen::Index>(used), 3);
  out.targets.resize(static_cast<Eigen::Index>(used), 3);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!regular[i]) continue;
    out.design.row(row) = normals[i].transpose();
    out.targets.row(row) = laplacians[i].transpose();
    ++row;
  }
  out.skipped = static_cast<int>(count - used);
  return out;
}

}  // namespace

LambdaFit fit_lambda(const SurfacePatch& surface, const Grid& grid) {
  if (grid.m * grid.k < 3)
    throw std::invalid_argument("fit_lambda: grid must have at least 3 points");

  const GridSamples samples = collect_samples(surface, grid);
  const Eigen::Index n = samples.design.rows();
  if (n == 0)
    throw degenerate_grid_error(
        "fit_lambda: metric degenerates at every grid point");

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(kRankThreshold);
  cod.compute(samples.design);
  Eigen::Matrix3d coeffs = cod.solve(samples.targets);
  // A design column that is identically zero cannot carry weight; pin its
  // coefficients to exact zero (minimum-norm convention).
  for (int col = 0; col < 3; ++col)
    if (samples.design.col(col).cwiseAbs().maxCoeff() == 0.0)
      coeffs.row(col).setZero();

  const Eigen::MatrixXd residual = samples.targets - samples.design * coeffs;

  LambdaFit fit;
  fit.lambda = coeffs.transpose();
  fit.design_rank = static_cast<int>(cod.rank());
  fit.null_space_note = fit.design_rank < 3;
  fit.samples_used = static_cast<int>(n);
  fit.samples_skipped = samples.skipped;
  for (int i = 0; i < 3; ++i)
    fit.per_row_residuals[static_cast<std::size_t>(i)] =
        std::sqrt(residual.col(i).squaredNorm() / static_cast<double>(n));
  const double target_norm = samples.targets.norm();
  fit.rms_residual =
      target_norm > 0.0 ? residual.norm() / target_norm : 0.0;
  return fit;
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kSatisfies:
      return "satisfies";
    case Outcome::kFails:
      return "fails";
    case Outcome::kDegenerate:
      return "degenerate";
  }
  return "degenerate";
}

Verdict classify(const SurfacePatch& surface, const Grid& grid,
                 double tolerance) {
  Verdict verdict;
  verdict.grid = grid;
  verdict.tolerance = tolerance;
  try {
    verdict.fit = fit_lambda(surface, grid);
  } catch (const degenerate_grid_error& error) {
    verdict.outcome = Outcome::kDegenerate;
    verdict.note = error.what();
    return verdict;
  }
  if (verdict.fit.design_rank == 0) {
    verdict.outcome = Outcome::kDegenerate;
    verdict.note = "Gauss map design has rank 0";
    return verdict;
  }
  verdict.outcome = verdict.fit.rms_residual < tolerance ? Outcome::kSatisfies
                                                         : Outcome::kFails;
  return verdict;
}

TrigModes trig_modes(const std::function<double(double)>& g, int max_mode,
                     int samples) {
  if (max_mode < 0) throw std::invalid_argument("trig_modes: max_mode < 0");
  const int n = std::max(samples, 4 * max_mode + 8);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    values[static_cast<std::size_t>(j)] = g(2.0 * M_PI * j / n);

  TrigModes modes;
  modes.cos_modes.assign(static_cast<std::size_t>(max_mode), 0.0);
  modes.sin_modes.assign(static_cast<std::size_t>(max_mode), 0.0);
  double sum = 0.0;
  for (double v : values) sum += v;
  modes.a0 = sum / n;
  for (int m = 1; m <= max_mode; ++m) {
    double ac = 0.0, as = 0.0;
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * M_PI * m * j / n;
      ac += values[static_cast<std::size_t>(j)] * std::cos(angle);
      as += values[static_cast<std::size_t>(j)] * std::sin(angle);
    }
    modes.cos_modes[static_cast<std::size_t>(m - 1)] = 2.0 * ac / n;
    modes.sin_modes[static_cast<std::size_t>(m - 1)] = 2.0 * as / n;
  }
  return modes;
}

TrigModes trig_mode_decomposition(const SurfacePatch& surface, double t,
                                  int component, int max_mode,
                                  const Mat3& lambda) {
  if (component < 0 || component > 2)
    throw std::invalid_argument(
        "trig_mode_decomposition: component must be 0, 1 or 2");
  if (!surface.rect().phi_periodic)
    throw std::invalid_argument(
        "trig_mode_decomposition: chart is not periodic in phi");

  const double phi0 = surface.rect().phi0;
  const double span = surface.rect().phi1 - phi0;
  auto residual = [&](double theta) {
    const double phi = phi0 + span * theta / (2.0 * M_PI);
    const Vec3 lap = laplace_beltrami_gauss(surface, t, phi);
    const Vec3 n = surface.normal(t, phi);
    return (lap - lambda * n)[component];
  };
  return trig_modes(residual, max_mode);
}

std::vector<double> range_values(const ParamRange& range) {
  if (range.count < 1)
    throw std::invalid_argument("range_values: count must be positive");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(range.count));
  if (range.count == 1) {
    values.push_back(range.start);
    return values;
  }
  for (int i = 0; i < range.count; ++i)
    values.push_back(range.start + (range.stop - range.start) *
                                       static_cast<double>(i) /
                                       (range.count - 1));
  return values;
}

namespace {

std::vector<std::string> canonical_sweep_params(const std::string& tag) {
  if (tag == "cylinder") return {"r"};
  if (tag == "anchor-ring") return {"a", "r"};
  if (tag == "tube-circle") return {"R", "r"};
  if (tag == "tube-helix") return {"R", "p", "r"};
  if (tag == "sphere") return {"rho"};
  if (tag == "plane") return {};
  throw std::invalid_argument("residual_sweep: unknown surface tag '" + tag +
                              "'");
}

std::string describe_params(const std::map<std::string, double>& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out << ", ";
    out << key << "=" << value;
    first = false;
  }
  return out.str();
}

}  // namespace

SweepTable residual_sweep(const std::string& surface_tag,
                          const std::map<std::string, ParamRange>& ranges,
                          const Grid& grid, double tolerance) {
  const std::vector<std::string> names = canonical_sweep_params(surface_tag);
  for (const auto& name : names)
    if (!ranges.count(name))
      throw std::invalid_argument("residual_sweep: missing range for '" +
                                  name + "'");
  if (ranges.size() != names.size())
    throw std::invalid_argument(
        "residual_sweep: extra parameter ranges for surface '" + surface_tag +
        "'");

  std::vector<std::vector<double>> axes;
  axes.reserve(names.size());
  for (const auto& name : names) axes.push_back(range_values(ranges.at(name)));

  SweepTable table;
  table.surface = surface_tag;
  std::vector<std::size_t> index(names.size(), 0);
  while (true) {
    std::map<std::string, double> params;
    for (std::size_t i = 0; i < names.size(); ++i)
      params[names[i]] = axes[i][index[i]];

    try {
      const SurfacePatch surface = make_surface(surface_tag, params);
      const Verdict verdict = classify(surface, grid, tolerance);
      table.rows.push_back(
          {params, verdict.fit.rms_residual, to_string(verdict.outcome)});
    } catch (const std::invalid_argument& error) {
      table.notes.push_back("skipped " + describe_params(params) + ": " +
                            error.what());
    }

    // advance the cartesian-product counter (last axis fastest)
    std::size_t axis = names.size();
    while (axis > 0) {
      --axis;
      if (++index[axis] < axes[axis].size()) break;
      index[axis] = 0;
      if (axis == 0) return table;
    }
    if (names.empty()) return table;
  }
}

}  // namespace gaussfit
