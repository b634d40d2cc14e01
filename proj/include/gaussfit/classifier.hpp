#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussfit/operators.hpp"
#include "gaussfit/surfaces.hpp"

namespace gaussfit {

using Mat3 = Eigen::Matrix3d;

inline constexpr Grid kDefaultGrid{32, 32};
inline constexpr double kDefaultTolerance = 1e-6;

// Relative singular-value cutoff used for rank decisions in the fit.
inline constexpr double kRankThreshold = 1e-10;

// Thrown when a grid yields no usable samples (empty, or the metric
// degenerates at every point).
class degenerate_grid_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Best constant matrix Lambda for the pointwise condition  L n = Lambda n
// over a sample grid, in the least-squares sense.
struct LambdaFit {
  Mat3 lambda = Mat3::Zero();
  // Frobenius residual over the grid, relative to the size of L n
  // (zero when L n vanishes identically).
  double rms_residual = 0.0;
  // Absolute root-mean-square residual of each row's fit.
  std::array<double, 3> per_row_residuals{0.0, 0.0, 0.0};
  // Rank of the stacked Gauss-map design matrix.
  int design_rank = 0;
  // Set when the Gauss image spans fewer than 3 dimensions; Lambda then has
  // zero components along the null space (minimum-norm convention).
  bool null_space_note = false;
  int samples_used = 0;
  int samples_skipped = 0;
};

// Fits each row of Lambda independently against the shared design matrix
// whose rows are the sampled Gauss map vectors, via a column-pivoted
// orthogonal factorization (no normal equations).  Rank-deficient designs
// get the minimum-norm solution.  Grid points with a degenerate metric are
// skipped; a grid with no regular points raises degenerate_grid_error.
LambdaFit fit_lambda(const SurfacePatch& surface, const Grid& grid);

enum class Outcome { kSatisfies, kFails, kDegenerate };

std::string to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::kDegenerate;
  LambdaFit fit;
  double tolerance = kDefaultTolerance;
  Grid grid;
  std::string note;  // reason when degenerate
};

// Satisfies iff the relative residual of the fit is below tolerance.
// Degenerate when the grid has no usable points or the design rank is 0.
Verdict classify(const SurfacePatch& surface, const Grid& grid = kDefaultGrid,
                 double tolerance = kDefaultTolerance);

// Discrete Fourier coefficients a0, a_m cos(m phi) + b_m sin(m phi).
struct TrigModes {
  double a0 = 0.0;
  std::vector<double> cos_modes;  // m = 1..max_mode
  std::vector<double> sin_modes;
};

// Modes of a 2*pi-periodic function sampled uniformly.
TrigModes trig_modes(const std::function<double(double)>& g, int max_mode,
                     int samples = 256);

// Modes in phi of the fit residual  (L n - Lambda n)_component  at fixed t.
// Pass Lambda = 0 to decompose L n itself.  Requires a phi-periodic chart.
TrigModes trig_mode_decomposition(const SurfacePatch& surface, double t,
                                  int component, int max_mode,
                                  const Mat3& lambda);

// Inclusive linspace: count values from start to stop (count == 1 gives
// start).
struct ParamRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
};

std::vector<double> range_values(const ParamRange& range);

struct SweepRow {
  std::map<std::string, double> params;
  double rms_residual = 0.0;
  std::string verdict;
};

struct SweepTable {
  std::string surface;
  std::vector<SweepRow> rows;
  std::vector<std::string> notes;  // skipped parameter combinations
};

// Classifies every combination in the ranges' cartesian product.  Parameter
// combinations the surface factory rejects are skipped and recorded in
// notes.
SweepTable residual_sweep(const std::string& surface_tag,
                          const std::map<std::string, ParamRange>& ranges,
                          const Grid& grid = kDefaultGrid,
                          double tolerance = kDefaultTolerance);

}  // namespace gaussfit
