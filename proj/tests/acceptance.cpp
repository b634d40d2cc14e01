// Acceptance checks for the classifier pipeline.  Each criterion prints one
// [PASS]/[FAIL] line; the exit code is the number of failures.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gaussfit/classifier.hpp"
#include "gaussfit/operators.hpp"
#include "gaussfit/report.hpp"
#include "test_support.hpp"

using gaussfit::Grid;
using gaussfit::LambdaFit;
using gaussfit::Mat3;
using gaussfit::Outcome;
using gaussfit::ScalarField;
using gaussfit::SurfacePatch;
using gaussfit::Vec3;

namespace {

// Pinned tolerances.
constexpr double kPointwiseTol = 1e-9;    // closed-form operator identities
constexpr double kLambdaTol = 1e-9;       // fitted entries vs exact values
constexpr double kExactFitTol = 1e-10;    // relative residual of exact fits
constexpr double kFailFloor = 1e-5;       // residual proving a genuine misfit
constexpr double kOracleAgreeTol = 1e-6;  // library fit vs oracle fit
constexpr double kAuditExactTol = 1e-7;   // unflagged audit findings
constexpr double kAuditFlagFloor = 1e-2;  // flagged tube discrepancy
constexpr double kTakahashiTol = 1e-6;    // |L x + 2 H n| on every surface
constexpr double kPropertyTol = 1e-8;     // equivariance properties
constexpr double kGridShiftMax = 0.10;    // relative residual drift, 32 -> 64

// Expected anchor-ring residuals, frozen to two significant figures.  The
// values come from the independent normal-equations oracle below evaluated
// on a dense grid; the oracle is rerun live as a cross-check.
struct RingCase {
  double a, r;
  double frozen_residual;
};
const RingCase kRingCases[] = {{2.0, 0.1, 0.035}, {2.0, 0.5, 0.18},
                               {3.0, 1.0, 0.24}};

bool within_two_sigfigs(double measured, double frozen) {
  const double unit =
      std::pow(10.0, std::floor(std::log10(std::fabs(frozen))) - 1.0);
  return std::fabs(measured - frozen) <= 0.5 * unit;
}

// ---------------------------------------------------------------------------
// Independent oracle: closed-form torus Gauss map and its Laplacian, fitted
// by hand-rolled normal equations and Gaussian elimination.  No library code.

struct V3 {
  double x[3];
};

V3 oracle_normal(double t, double phi) {
  return {{-std::cos(t) * std::cos(phi), -std::cos(t) * std::sin(phi),
           -std::sin(t)}};
}

V3 oracle_gauss_laplacian(double a, double r, double t, double phi) {
  const double ct = std::cos(t), st = std::sin(t);
  const double gamma = a + r * ct;
  const double radial =
      st * st / (r * gamma) - (1.0 / (r * r) + 1.0 / (gamma * gamma)) * ct;
  const double vertical = -(st / r) * (ct / gamma + 1.0 / r);
  return {{radial * std::cos(phi), radial * std::sin(phi), vertical}};
}

void oracle_solve3(double M[3][3], double b[3], double c[3]) {
  int perm[3] = {0, 1, 2};
  for (int k = 0; k < 3; ++k) {
    int pivot = k;
    for (int i = k + 1; i < 3; ++i)
      if (std::fabs(M[perm[i]][k]) > std::fabs(M[perm[pivot]][k])) pivot = i;
    const int tmp = perm[k];
    perm[k] = perm[pivot];
    perm[pivot] = tmp;
    for (int i = k + 1; i < 3; ++i) {
      const double w = M[perm[i]][k] / M[perm[k]][k];
      for (int j = k; j < 3; ++j) M[perm[i]][j] -= w * M[perm[k]][j];
      b[perm[i]] -= w * b[perm[k]];
    }
  }
  for (int k = 2; k >= 0; --k) {
    double s = b[perm[k]];
    for (int j = k + 1; j < 3; ++j) s -= M[perm[k]][j] * c[j];
    c[k] = s / M[perm[k]][k];
  }
}

double oracle_ring_residual(double a, double r, int m, int k) {
  double A[3][3] = {{0}}, B[3][3] = {{0}};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      const double t = 2.0 * M_PI * i / m;
      const double phi = 2.0 * M_PI * j / k;
      const V3 n = oracle_normal(t, phi);
      const V3 y = oracle_gauss_laplacian(a, r, t, phi);
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
          A[p][q] += n.x[p] * n.x[q];
          B[p][q] += n.x[p] * y.x[q];
        }
    }
  }
  double lambdaT[3][3];
  for (int col = 0; col < 3; ++col) {
    double M[3][3], rhs[3], c[3];
    for (int p = 0; p < 3; ++p) {
      rhs[p] = B[p][col];
      for (int q = 0; q < 3; ++q) M[p][q] = A[p][q];
    }
    oracle_solve3(M, rhs, c);
    for (int p = 0; p < 3; ++p) lambdaT[p][col] = c[p];
  }

  double num = 0.0, den = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      const double t = 2.0 * M_PI * i / m;
      const double phi = 2.0 * M_PI * j / k;
      const V3 n = oracle_normal(t, phi);
      const V3 y = oracle_gauss_laplacian(a, r, t, phi);
      for (int q = 0; q < 3; ++q) {
        double fitted = 0.0;
        for (int p = 0; p < 3; ++p) fitted += n.x[p] * lambdaT[p][q];
        num += (y.x[q] - fitted) * (y.x[q] - fitted);
        den += y.x[q] * y.x[q];
      }
    }
  }
  return std::sqrt(num / den);
}

// ---------------------------------------------------------------------------

class Harness {
 public:
  void criterion(int number, const std::string& title, bool ok,
                 const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

void criterion_cylinder_pointwise(Harness& h) {
  bool ok = true;
  std::string detail;
  for (double r : {0.5, 1.0, 2.0}) {
    const SurfacePatch cyl = gaussfit::make_cylinder(r);
    double worst = 0.0;
    for (auto [t, phi] : gaussfit::grid_points(cyl.rect(), Grid{32, 32})) {
      const Vec3 lap = gaussfit::laplace_beltrami_gauss(cyl, t, phi);
      const Vec3 expected = cyl.normal(t, phi) / (r * r);
      worst = std::max(worst, (lap - expected).norm());
    }
    if (!(worst < kPointwiseTol)) {
      ok = false;
      detail += "r=" + fmt(r) + " max error " + fmt(worst) + "; ";
    }
  }
  h.criterion(1, "cylinders: L n = n / r^2 pointwise (|err| < 1e-9)", ok,
              detail);
}

void criterion_cylinder_fit(Harness& h) {
  bool ok = true;
  std::string detail;
  for (double r : {0.5, 1.0, 2.0}) {
    const LambdaFit fit =
        gaussfit::fit_lambda(gaussfit::make_cylinder(r), Grid{32, 32});
    const double e = 1.0 / (r * r);
    const bool diag = std::fabs(fit.lambda(0, 0) - e) < kLambdaTol &&
                      std::fabs(fit.lambda(1, 1) - e) < kLambdaTol;
    const bool off = std::fabs(fit.lambda(0, 1)) < kLambdaTol &&
                     std::fabs(fit.lambda(1, 0)) < kLambdaTol &&
                     std::fabs(fit.lambda(2, 0)) < kLambdaTol &&
                     std::fabs(fit.lambda(2, 1)) < kLambdaTol;
    const bool null_col = fit.lambda(0, 2) == 0.0 && fit.lambda(1, 2) == 0.0 &&
                          fit.lambda(2, 2) == 0.0;
    const bool shape = fit.design_rank == 2 && fit.rms_residual < kExactFitTol;
    if (!(diag && off && null_col && shape)) {
      ok = false;
      detail += "r=" + fmt(r) + " lambda/rank/residual off; ";
    }
  }
  h.criterion(2,
              "cylinders: lambda = diag(1/r^2, 1/r^2, 0), exact null column, "
              "rank 2",
              ok, detail);
}

void criterion_ring_residuals(Harness& h) {
  bool ok = true;
  std::string detail;
  for (const RingCase& c : kRingCases) {
    const LambdaFit fit = gaussfit::fit_lambda(
        gaussfit::make_anchor_ring(c.a, c.r), gaussfit::kDefaultGrid);
    const double oracle = oracle_ring_residual(c.a, c.r, 160, 160);
    const bool misfit = fit.rms_residual > kFailFloor;
    const bool frozen = within_two_sigfigs(fit.rms_residual, c.frozen_residual);
    const bool oracle_frozen = within_two_sigfigs(oracle, c.frozen_residual);
    const bool routes_agree =
        std::fabs(fit.rms_residual - oracle) < kOracleAgreeTol;
    detail += "a=" + fmt(c.a) + " r=" + fmt(c.r) + ": fit " +
              fmt(fit.rms_residual) + " oracle " + fmt(oracle) + " frozen " +
              fmt(c.frozen_residual) + "; ";
    if (!(misfit && frozen && oracle_frozen && routes_agree)) ok = false;
  }
  h.criterion(3, "anchor rings: residuals match the frozen oracle values", ok,
              detail);
}

void criterion_tubes(Harness& h) {
  bool ok = true;
  std::string detail;

  for (double p : {0.5, 1.0}) {
    const auto verdict = gaussfit::classify(gaussfit::make_surface(
        "tube-helix", {{"R", 1.0}, {"p", p}, {"r", 0.2}}));
    if (verdict.outcome != Outcome::kFails) {
      ok = false;
      detail += "helix tube p=" + fmt(p) + " not rejected; ";
    }
  }

  const auto straight =
      gaussfit::classify(gaussfit::make_tube(gaussfit::make_line(), 0.7));
  if (straight.outcome != Outcome::kSatisfies) {
    ok = false;
    detail += "straight tube rejected; ";
  }

  const auto bent = gaussfit::classify(
      gaussfit::make_surface("tube-circle", {{"R", 2.0}, {"r", 0.5}}));
  if (bent.outcome != Outcome::kFails) {
    ok = false;
    detail += "circular tube not rejected; ";
  }

  for (auto [a, r] : {std::pair{2.0, 0.5}, std::pair{3.0, 1.0}}) {
    const auto via_tube = gaussfit::classify(
        gaussfit::make_surface("tube-circle", {{"R", a}, {"r", r}}));
    const auto via_ring = gaussfit::classify(
        gaussfit::make_surface("anchor-ring", {{"a", a}, {"r", r}}));
    if (via_tube.outcome != via_ring.outcome) {
      ok = false;
      detail += "chart disagreement at a=" + fmt(a) + " r=" + fmt(r) + "; ";
    }
  }

  h.criterion(4,
              "tubes: straight ones satisfy the condition, curved ones fail, "
              "charts agree",
              ok, detail);
}

void criterion_audit(Harness& h) {
  bool ok = true;
  std::string detail;

  struct Expectation {
    SurfacePatch surface;
    std::size_t findings;
    bool expect_tube_flag;
  };
  std::vector<Expectation> cases;
  cases.push_back({gaussfit::make_cylinder(1.0), 1, false});
  cases.push_back({gaussfit::make_anchor_ring(2.0, 0.5), 4, false});
  cases.push_back(
      {gaussfit::make_surface("tube-circle", {{"R", 2.0}, {"r", 0.5}}), 1,
       true});
  cases.push_back({gaussfit::make_surface(
                       "tube-helix", {{"R", 1.0}, {"p", 1.0}, {"r", 0.2}}),
                   1, true});
  cases.push_back({gaussfit::make_tube(gaussfit::make_line(), 0.7), 1, false});
  cases.push_back({gaussfit::make_sphere(2.0), 0, false});
  cases.push_back({gaussfit::make_plane(), 0, false});

  for (const Expectation& c : cases) {
    const auto audit = gaussfit::audit_closed_forms(c.surface, Grid{32, 32});
    if (audit.findings.size() != c.findings) {
      ok = false;
      detail += c.surface.tag() + ": expected " + fmt(double(c.findings)) +
                " findings, got " + fmt(double(audit.findings.size())) + "; ";
      continue;
    }
    bool tube_flagged = false;
    for (const auto& finding : audit.findings) {
      if (finding.flagged) {
        // a flagged formula must carry its measured discrepancy
        if (finding.formula == "tube_laplacian" &&
            finding.max_abs_discrepancy > kAuditFlagFloor) {
          tube_flagged = true;
        } else {
          ok = false;
          detail += c.surface.tag() + ": unexpected flag on " +
                    finding.formula + "; ";
        }
      } else if (!(finding.max_abs_discrepancy < kAuditExactTol)) {
        ok = false;
        detail += c.surface.tag() + ": " + finding.formula +
                  " discrepancy " + fmt(finding.max_abs_discrepancy) + "; ";
      }
    }
    if (c.expect_tube_flag && !tube_flagged) {
      ok = false;
      detail += c.surface.tag() +
                ": tube operator discrepancy not reported; ";
    }
  }

  h.criterion(5,
              "audit: closed forms verified; the tube-coordinate operator's "
              "phi term is flagged on curved tubes",
              ok, detail);
}

void criterion_takahashi(Harness& h) {
  bool ok = true;
  std::string detail;
  std::vector<SurfacePatch> surfaces;
  surfaces.push_back(gaussfit::make_plane());
  surfaces.push_back(gaussfit::make_cylinder(1.5));
  surfaces.push_back(gaussfit::make_sphere(2.0));
  surfaces.push_back(gaussfit::make_anchor_ring(2.0, 0.5));
  surfaces.push_back(
      gaussfit::make_surface("tube-circle", {{"R", 2.0}, {"r", 0.5}}));
  surfaces.push_back(gaussfit::make_surface(
      "tube-helix", {{"R", 1.0}, {"p", 1.0}, {"r", 0.2}}));
  surfaces.push_back(gaussfit::make_tube(gaussfit::make_line(), 0.7));

  for (const SurfacePatch& s : surfaces) {
    const double residual = gaussfit::takahashi_residual(s, Grid{32, 32});
    if (!(residual < kTakahashiTol)) {
      ok = false;
      detail += s.tag() + ": " + fmt(residual) + "; ";
    }
  }
  h.criterion(6, "L x + 2 H n vanishes on every built-in surface", ok, detail);
}

void criterion_properties(Harness& h) {
  bool ok = true;
  std::string detail;
  const SurfacePatch ring = gaussfit::make_anchor_ring(2.0, 0.5);
  const SurfacePatch cyl = gaussfit::make_cylinder(1.0);
  const Grid grid{32, 32};
  const LambdaFit ring_fit = gaussfit::fit_lambda(ring, grid);
  const LambdaFit cyl_fit = gaussfit::fit_lambda(cyl, grid);

  for (const SurfacePatch* s : {&ring, &cyl}) {
    const LambdaFit base = s == &ring ? ring_fit : cyl_fit;
    const LambdaFit flipped =
        gaussfit::fit_lambda(testsupport::flipped_orientation(*s), grid);
    if ((base.lambda - flipped.lambda).norm() > kPropertyTol) {
      ok = false;
      detail += s->tag() + ": orientation flip moved lambda; ";
    }
  }

  for (int trial = 0; trial < 3; ++trial) {
    const Eigen::Matrix3d R = testsupport::random_rotation();
    const LambdaFit turned =
        gaussfit::fit_lambda(testsupport::rotated(ring, R), grid);
    if ((turned.lambda - R * ring_fit.lambda * R.transpose()).norm() >
        kPropertyTol) {
      ok = false;
      detail += "rotation trial " + fmt(double(trial)) + " broke R L R^T; ";
    }
  }

  for (double s : {0.5, 2.0}) {
    const LambdaFit grown =
        gaussfit::fit_lambda(testsupport::scaled(ring, s), grid);
    if ((grown.lambda - ring_fit.lambda / (s * s)).norm() > kPropertyTol) {
      ok = false;
      detail += "scaling by " + fmt(s) + " broke lambda / s^2; ";
    }
  }

  {
    const double coarse = ring_fit.rms_residual;
    const double fine = gaussfit::fit_lambda(ring, Grid{64, 64}).rms_residual;
    const bool both_tiny = coarse < gaussfit::kDefaultTolerance &&
                           fine < gaussfit::kDefaultTolerance;
    if (!both_tiny && std::fabs(fine - coarse) > kGridShiftMax * coarse) {
      ok = false;
      detail += "doubling the grid moved the residual by more than 10%; ";
    }
    const double cyl_fine =
        gaussfit::fit_lambda(cyl, Grid{64, 64}).rms_residual;
    if (!(cyl_fit.rms_residual < kExactFitTol && cyl_fine < kExactFitTol)) {
      ok = false;
      detail += "cylinder residual not stable under doubling; ";
    }
  }

  {
    const ScalarField c = gaussfit::constant_field(2.5);
    const ScalarField f = gaussfit::gauss_component(ring, 0);
    const ScalarField g = gaussfit::gauss_component(ring, 2);
    for (auto [t, phi] : testsupport::sample_rect(ring.rect(), 25)) {
      if (std::fabs(gaussfit::laplace_beltrami(ring, c, t, phi)) > 1e-12) {
        ok = false;
        detail += "constant field not annihilated; ";
        break;
      }
      const double combined = gaussfit::laplace_beltrami(
          ring,
          ScalarField([&](double u, double v) {
            return 2.0 * f(u, v) - 3.0 * g(u, v);
          }),
          t, phi);
      const double split = 2.0 * gaussfit::laplace_beltrami(ring, f, t, phi) -
                           3.0 * gaussfit::laplace_beltrami(ring, g, t, phi);
      if (std::fabs(combined - split) > 1e-5) {
        ok = false;
        detail += "operator not linear; ";
        break;
      }
    }
  }

  h.criterion(7,
              "fit properties: orientation, rotation, scaling, grid "
              "stability, linearity",
              ok, detail);
}

void criterion_sphere_plane(Harness& h) {
  bool ok = true;
  std::string detail;

  for (double rho : {1.0, 2.0}) {
    const auto verdict = gaussfit::classify(gaussfit::make_sphere(rho));
    const Mat3 expected = 2.0 / (rho * rho) * Mat3::Identity();
    if (verdict.outcome != Outcome::kSatisfies ||
        verdict.fit.design_rank != 3 ||
        (verdict.fit.lambda - expected).norm() > kPropertyTol) {
      ok = false;
      detail += "sphere rho=" + fmt(rho) + " off; ";
    }
  }

  const SurfacePatch plane = gaussfit::make_plane();
  double worst = 0.0;
  for (auto [t, phi] : gaussfit::grid_points(plane.rect(), Grid{32, 32}))
    worst =
        std::max(worst, gaussfit::laplace_beltrami_gauss(plane, t, phi).norm());
  const auto verdict = gaussfit::classify(plane);
  if (worst != 0.0 || verdict.outcome != Outcome::kSatisfies ||
      verdict.fit.lambda.norm() != 0.0 || verdict.fit.rms_residual != 0.0) {
    ok = false;
    detail += "plane: L n != 0 or lambda != 0; ";
  }

  h.criterion(8, "spheres fit (2/rho^2) I at rank 3; the plane fits zero", ok,
              detail);
}

}  // namespace

int main() {
  Harness harness;
  criterion_cylinder_pointwise(harness);
  criterion_cylinder_fit(harness);
  criterion_ring_residuals(harness);
  criterion_tubes(harness);
  criterion_audit(harness);
  criterion_takahashi(harness);
  criterion_properties(harness);
  criterion_sphere_plane(harness);
  std::printf("acceptance: %d of 8 criteria failed\n", harness.failures());
  return harness.failures();
}
