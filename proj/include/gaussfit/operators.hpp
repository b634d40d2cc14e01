#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaussfit/surfaces.hpp"

namespace gaussfit {

// Value and partials of a scalar function of (t, phi) up to second order.
struct Jet2 {
  double f = 0.0;
  double f_t = 0.0, f_phi = 0.0;
  double f_tt = 0.0, f_tphi = 0.0, f_phiphi = 0.0;
};

// Scalar function on a parameter rectangle.  When constructed from a bare
// evaluator the partials fall back to central finite differences; an exact
// jet evaluator takes precedence when supplied.
class ScalarField {
 public:
  explicit ScalarField(std::function<double(double, double)> value);
  ScalarField(std::function<double(double, double)> value,
              std::function<Jet2(double, double)> exact_jet);

  double operator()(double t, double phi) const { return value_(t, phi); }
  Jet2 jet(double t, double phi) const;
  bool has_exact_jet() const { return static_cast<bool>(exact_jet_); }

 private:
  std::function<double(double, double)> value_;
  std::function<Jet2(double, double)> exact_jet_;
};

ScalarField constant_field(double value);

// Component i (0..2) of the Gauss map / chart of a patch, with exact jets.
ScalarField gauss_component(const SurfacePatch& surface, int i);
ScalarField chart_component(const SurfacePatch& surface, int i);

// Laplace-Beltrami operator of the first fundamental form, with the sign
// that makes the spectrum nonnegative (the negative of the divergence form):
//   L f = -(1/W) [ d_t((G f_t - F f_phi)/W) + d_phi((E f_phi - F f_t)/W) ].
// Metric partials are exact; field partials are exact when the field has a
// jet evaluator and finite differences otherwise.
double laplace_beltrami(const SurfacePatch& surface, const ScalarField& field,
                        double t, double phi);

// Shared core: apply the operator given a metric and a field jet.
double laplace_beltrami_apply(const MetricData& m, const Jet2& f);

// The operator applied to each component of the Gauss map / chart.
Vec3 laplace_beltrami_gauss(const SurfacePatch& surface, double t, double phi);
Vec3 laplace_beltrami_position(const SurfacePatch& surface, double t,
                               double phi);

// Closed-form coefficients of the Laplacian in tube coordinates,
//   L = c_tt d_tt + c_tphi d_tphi + c_phiphi d_phiphi + c_t d_t + c_phi d_phi
// with delta = 1 - r kappa cos(phi) and beta = kappa' cos(phi) + kappa tau
// sin(phi).  This coefficient set is what audit_closed_forms checks against
// the metric-derived operator; the d_phi term disagrees off the cylinder,
// and the audit reports that rather than hiding it.
struct TubeOperatorCoefficients {
  double c_tt = 0.0, c_tphi = 0.0, c_phiphi = 0.0;
  double c_t = 0.0, c_phi = 0.0;
  double delta = 0.0, beta = 0.0;
};

TubeOperatorCoefficients tube_operator_coefficients(double kappa,
                                                    double kappa_rate,
                                                    double tau, double r,
                                                    double phi);

double apply_tube_operator(const TubeOperatorCoefficients& coeff,
                           const Jet2& f);

// Closed-form anchor-ring Laplacian, gamma = a + r cos t:
//   L f = -(1/gamma^2) f_phiphi + (sin t/(r gamma)) f_t - (1/r^2) f_tt.
double anchor_ring_operator(const ScalarField& field, double a, double r,
                            double t, double phi);

// Closed-form value of the operator on the anchor-ring Gauss map:
//   component 1: [sin^2 t/(r gamma) - (1/r^2 + 1/gamma^2) cos t] cos phi
//   component 2: the same times sin phi
//   component 3: -(sin t/r) (cos t/gamma + 1/r)
Vec3 anchor_ring_gauss_laplacian(double a, double r, double t, double phi);

// One audited closed-form formula: its worst absolute disagreement with the
// metric-derived operator over the sample grid, and whether that exceeds the
// audit tolerance.
struct AuditFinding {
  std::string formula;
  double max_abs_discrepancy = 0.0;
  bool flagged = false;
};

struct AuditReport {
  std::vector<AuditFinding> findings;
  double tolerance = 0.0;
};

inline constexpr double kAuditTolerance = 1e-7;

// Compares the closed-form operators attached to the surface family against
// the metric-derived operator on the Gauss map components.  Formulas that
// disagree are reported with their discrepancy, never silently dropped.
//   cylinder     -> cylinder_laplacian
//   anchor-ring  -> anchor_ring_laplacian, anchor_ring_dn1/2/3
//   tube-*       -> tube_laplacian
//   sphere/plane -> (no attached closed forms)
AuditReport audit_closed_forms(const SurfacePatch& surface, const Grid& grid,
                               double tolerance = kAuditTolerance);

// Max over the grid of |L x + 2 H n|, which vanishes identically for the
// mean-curvature/operator sign conventions used here.
double takahashi_residual(const SurfacePatch& surface, const Grid& grid);

}  // namespace gaussfit
