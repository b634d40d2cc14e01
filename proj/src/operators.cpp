#include "gaussfit/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gaussfit/numdiff.hpp"

namespace gaussfit {

ScalarField::ScalarField(std::function<double(double, double)> value)
    : value_(std::move(value)) {}

ScalarField::ScalarField(std::function<double(double, double)> value,
                         std::function<Jet2(double, double)> exact_jet)
    : value_(std::move(value)), exact_jet_(std::move(exact_jet)) {}

Jet2 ScalarField::jet(double t, double phi) const {
  if (exact_jet_) return exact_jet_(t, phi);

  const auto& f = value_;
  Jet2 j;
  j.f = f(t, phi);
  const double h1t = fd::step_first(t);
  const double h1p = fd::step_first(phi);
  j.f_t = (f(t + h1t, phi) - f(t - h1t, phi)) / (2.0 * h1t);
  j.f_phi = (f(t, phi + h1p) - f(t, phi - h1p)) / (2.0 * h1p);
  const double h2t = fd::step_second(t);
  const double h2p = fd::step_second(phi);
  j.f_tt = (f(t + h2t, phi) - 2.0 * j.f + f(t - h2t, phi)) / (h2t * h2t);
  j.f_phiphi = (f(t, phi + h2p) - 2.0 * j.f + f(t, phi - h2p)) / (h2p * h2p);
  j.f_tphi = fd::derivative_mixed(f, t, phi);
  return j;
}

ScalarField constant_field(double value) {
  auto jet = [value](double, double) {
    Jet2 j;
    j.f = value;
    return j;
  };
  return ScalarField([value](double, double) { return value; }, jet);
}

namespace {

Jet2 component_jet(const SurfaceJet& j, int i, bool gauss) {
  Jet2 out;
  if (gauss) {
    out.f = j.n[i];
    out.f_t = j.n_t[i];
    out.f_phi = j.n_phi[i];
    out.f_tt = j.n_tt[i];
    out.f_tphi = j.n_tphi[i];
    out.f_phiphi = j.n_phiphi[i];
  } else {
    out.f = j.x[i];
    out.f_t = j.x_t[i];
    out.f_phi = j.x_phi[i];
    out.f_tt = j.x_tt[i];
    out.f_tphi = j.x_tphi[i];
    out.f_phiphi = j.x_phiphi[i];
  }
  return out;
}

ScalarField component_field(const SurfacePatch& surface, int i, bool gauss) {
  if (i < 0 || i > 2)
    throw std::invalid_argument("component index must be 0, 1 or 2");
  auto value = [surface, i, gauss](double t, double phi) {
    const SurfaceJet j = surface.jet(t, phi);
    return gauss ? j.n[i] : j.x[i];
  };
  auto jet = [surface, i, gauss](double t, double phi) {
    return component_jet(surface.jet(t, phi), i, gauss);
  };
  return ScalarField(value, jet);
}

}  // namespace

ScalarField gauss_component(const SurfacePatch& surface, int i) {
  return component_field(surface, i, true);
}

ScalarField chart_component(const SurfacePatch& surface, int i) {
  return component_field(surface, i, false);
}

double laplace_beltrami_apply(const MetricData& m, const Jet2& f) {
  const double W = m.W;
  const double W_t = (m.E_t * m.G + m.E * m.G_t - 2.0 * m.F * m.F_t) / (2.0 * W);
  const double W_phi =
      (m.E_phi * m.G + m.E * m.G_phi - 2.0 * m.F * m.F_phi) / (2.0 * W);

  const double P = m.G * f.f_t - m.F * f.f_phi;
  const double P_t =
      m.G_t * f.f_t + m.G * f.f_tt - m.F_t * f.f_phi - m.F * f.f_tphi;
  const double Q = m.E * f.f_phi - m.F * f.f_t;
  const double Q_phi =
      m.E_phi * f.f_phi + m.E * f.f_phiphi - m.F_phi * f.f_t - m.F * f.f_tphi;

  return -((P_t - P * W_t / W) + (Q_phi - Q * W_phi / W)) / (W * W);
}

double laplace_beltrami(const SurfacePatch& surface, const ScalarField& field,
                        double t, double phi) {
  const MetricData m = metric(surface, t, phi);
  return laplace_beltrami_apply(m, field.jet(t, phi));
}

Vec3 laplace_beltrami_gauss(const SurfacePatch& surface, double t,
                            double phi) {
  const MetricData m = metric(surface, t, phi);
  const SurfaceJet j = surface.jet(t, phi);
  return Vec3(laplace_beltrami_apply(m, component_jet(j, 0, true)),
              laplace_beltrami_apply(m, component_jet(j, 1, true)),
              laplace_beltrami_apply(m, component_jet(j, 2, true)));
}

Vec3 laplace_beltrami_position(const SurfacePatch& surface, double t,
                               double phi) {
  const MetricData m = metric(surface, t, phi);
  const SurfaceJet j = surface.jet(t, phi);
  return Vec3(laplace_beltrami_apply(m, component_jet(j, 0, false)),
              laplace_beltrami_apply(m, component_jet(j, 1, false)),
              laplace_beltrami_apply(m, component_jet(j, 2, false)));
}

TubeOperatorCoefficients tube_operator_coefficients(double kappa,
                                                    double kappa_rate,
                                                    double tau, double r,
                                                    double phi) {
  if (!(r > 0.0))
    throw std::invalid_argument(
        "tube_operator_coefficients: radius must be positive");
  const double c = std::cos(phi), s = std::sin(phi);
  const double delta = 1.0 - r * kappa * c;
  if (!(delta > 0.0))
    throw std::domain_error(
        "tube_operator_coefficients: chart degenerates (delta <= 0)");

  TubeOperatorCoefficients out;
  out.delta = delta;
  out.beta = kappa_rate * c + kappa * tau * s;
  const double d2 = delta * delta;
  const double d3 = d2 * delta;
  out.c_tt = -1.0 / d2;
  out.c_tphi = 2.0 * tau / d2;
  out.c_phiphi = -(r * r * tau * tau + d2) / (r * r * d2);
  out.c_t = -r * out.beta / d3;
  out.c_phi = kappa * s / (r * delta);
  return out;
}

double apply_tube_operator(const TubeOperatorCoefficients& coeff,
                           const Jet2& f) {
  return coeff.c_tt * f.f_tt + coeff.c_tphi * f.f_tphi +
         coeff.c_phiphi * f.f_phiphi + coeff.c_t * f.f_t +
         coeff.c_phi * f.f_phi;
}

double anchor_ring_operator(const ScalarField& field, double a, double r,
                            double t, double phi) {
  if (!(r > 0.0) || !(a > r))
    throw std::invalid_argument("anchor_ring_operator: need a > r > 0");
  const double gamma = a + r * std::cos(t);
  const Jet2 f = field.jet(t, phi);
  return -f.f_phiphi / (gamma * gamma) + std::sin(t) * f.f_t / (r * gamma) -
         f.f_tt / (r * r);
}

Vec3 anchor_ring_gauss_laplacian(double a, double r, double t, double phi) {
  if (!(r > 0.0) || !(a > r))
    throw std::invalid_argument("anchor_ring_gauss_laplacian: need a > r > 0");
  const double ct = std::cos(t), st = std::sin(t);
  const double gamma = a + r * ct;
  const double radial =
      st * st / (r * gamma) - (1.0 / (r * r) + 1.0 / (gamma * gamma)) * ct;
  const double vertical = -(st / r) * (ct / gamma + 1.0 / r);
  return Vec3(radial * std::cos(phi), radial * std::sin(phi), vertical);
}

namespace {

void audit_formula(AuditReport& report, const std::string& name,
                   const std::vector<std::pair<double, double>>& points,
                   const std::function<double(double, double)>& discrepancy) {
  double worst = 0.0;
  for (const auto& [t, phi] : points)
    worst = std::max(worst, std::abs(discrepancy(t, phi)));
  report.findings.push_back({name, worst, worst > report.tolerance});
}

}  // namespace

AuditReport audit_closed_forms(const SurfacePatch& surface, const Grid& grid,
                               double tolerance) {
  AuditReport report;
  report.tolerance = tolerance;
  const auto points = grid_points(surface.rect(), grid);
  const std::string& tag = surface.tag();

  if (tag == "cylinder") {
    const double r = surface.params().at("r");
    audit_formula(report, "cylinder_laplacian", points,
                  [&](double t, double phi) {
                    const SurfaceJet j = surface.jet(t, phi);
                    const Vec3 reference = laplace_beltrami_gauss(surface, t, phi);
                    double worst = 0.0;
                    for (int i = 0; i < 3; ++i) {
                      const Jet2 f = component_jet(j, i, true);
                      const double closed =
                          -f.f_tt - f.f_phiphi / (r * r);
                      worst = std::max(worst, std::abs(closed - reference[i]));
                    }
                    return worst;
                  });
  } else if (tag == "anchor-ring") {
    const double a = surface.params().at("a");
    const double r = surface.params().at("r");
    audit_formula(report, "anchor_ring_laplacian", points,
                  [&](double t, double phi) {
                    const SurfaceJet j = surface.jet(t, phi);
                    const Vec3 reference = laplace_beltrami_gauss(surface, t, phi);
                    const double gamma = a + r * std::cos(t);
                    double worst = 0.0;
                    for (int i = 0; i < 3; ++i) {
                      const Jet2 f = component_jet(j, i, true);
                      const double closed = -f.f_phiphi / (gamma * gamma) +
                                            std::sin(t) * f.f_t / (r * gamma) -
                                            f.f_tt / (r * r);
                      worst = std::max(worst, std::abs(closed - reference[i]));
                    }
                    return worst;
                  });
    for (int i = 0; i < 3; ++i) {
      audit_formula(report, "anchor_ring_dn" + std::to_string(i + 1), points,
                    [&, i](double t, double phi) {
                      const Vec3 closed =
                          anchor_ring_gauss_laplacian(a, r, t, phi);
                      const Vec3 reference =
                          laplace_beltrami_gauss(surface, t, phi);
                      return closed[i] - reference[i];
                    });
    }
  } else if (surface.tube().has_value()) {
    const TubeShape& shape = *surface.tube();
    audit_formula(
        report, "tube_laplacian", points, [&](double t, double phi) {
          const FrenetData f = shape.directrix.at(t);
          const TubeOperatorCoefficients coeff = tube_operator_coefficients(
              f.curvature, f.curvature_rate, f.torsion, shape.radius, phi);
          const SurfaceJet j = surface.jet(t, phi);
          const Vec3 reference = laplace_beltrami_gauss(surface, t, phi);
          double worst = 0.0;
          for (int i = 0; i < 3; ++i) {
            const double closed =
                apply_tube_operator(coeff, component_jet(j, i, true));
            worst = std::max(worst, std::abs(closed - reference[i]));
          }
          return worst;
        });
  }
  return report;
}

double takahashi_residual(const SurfacePatch& surface, const Grid& grid) {
  const auto points = grid_points(surface.rect(), grid);
  double worst = 0.0;
  for (const auto& [t, phi] : points) {
    const Vec3 lap_x = laplace_beltrami_position(surface, t, phi);
    const double H = mean_curvature(surface, t, phi);
    const Vec3 n = surface.normal(t, phi);
    worst = std::max(worst, (lap_x + 2.0 * H * n).norm());
  }
  return worst;
}

}  // namespace gaussfit
