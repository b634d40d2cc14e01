#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussfit/curves.hpp"

namespace gaussfit {

// Chart and Gauss map of a parametric patch at one point, with all first and
// second partials.  Everything is closed-form for the built-in surfaces, so
// downstream operators run at machine accuracy.
struct SurfaceJet {
  Vec3 x, x_t, x_phi, x_tt, x_tphi, x_phiphi;
  Vec3 n, n_t, n_phi, n_tt, n_tphi, n_phiphi;
};

// Parameter rectangle [t0,t1] x [phi0,phi1] with per-axis periodicity.
struct ParamRect {
  double t0 = 0.0, t1 = 1.0;
  double phi0 = 0.0, phi1 = 1.0;
  bool t_periodic = false;
  bool phi_periodic = false;

  bool contains(double t, double phi) const;
};

// First fundamental form coefficients with their first partials and the area
// element W = sqrt(EG - F^2).
struct MetricData {
  double E = 0.0, F = 0.0, G = 0.0;
  double E_t = 0.0, E_phi = 0.0;
  double F_t = 0.0, F_phi = 0.0;
  double G_t = 0.0, G_phi = 0.0;
  double W = 0.0;
};

// Tube data retained by make_tube so operators can recover the directrix
// invariants at a given parameter.
struct TubeShape {
  double radius = 0.0;
  FrenetCurve directrix;
};

// Thrown when the first fundamental form degenerates (EG - F^2 <= 0) at a
// requested point.
class degenerate_point_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Immutable surface patch: a jet evaluator plus its parameter rectangle and
// a record of how it was built.
class SurfacePatch {
 public:
  SurfacePatch(std::string tag, std::map<std::string, double> params,
               std::function<SurfaceJet(double, double)> eval, ParamRect rect,
               std::optional<TubeShape> tube = std::nullopt);

  const std::string& tag() const { return tag_; }
  const std::map<std::string, double>& params() const { return params_; }
  const ParamRect& rect() const { return rect_; }
  const std::optional<TubeShape>& tube() const { return tube_; }

  SurfaceJet jet(double t, double phi) const { return eval_(t, phi); }
  Vec3 position(double t, double phi) const { return eval_(t, phi).x; }
  Vec3 normal(double t, double phi) const { return eval_(t, phi).n; }

 private:
  std::string tag_;
  std::map<std::string, double> params_;
  std::function<SurfaceJet(double, double)> eval_;
  ParamRect rect_;
  std::optional<TubeShape> tube_;
};

// Tube of radius r around a unit-speed directrix:
//   x(t, phi) = curve(t) + r cos(phi) normal(t) + r sin(phi) binormal(t)
// with the inward-pointing unit normal n = -(cos(phi) normal + sin(phi)
// binormal).  Requires 0 < r < 1/sup|curvature| so the chart is regular.
SurfacePatch make_tube(const FrenetCurve& directrix, double r);

// Torus of revolution with ring radius a and tube radius r (a > r > 0),
//   x(t, phi) = ((a + r cos t) cos phi, (a + r cos t) sin phi, r sin t).
SurfacePatch make_anchor_ring(double a, double r);

// Right circular cylinder x(t, phi) = (r cos phi, r sin phi, t) with inward
// normal n = -(cos phi, sin phi, 0).
SurfacePatch make_cylinder(double r);

// Round sphere of radius rho in latitude/longitude coordinates with the
// outward normal.  The latitude range stops short of the poles, where the
// chart degenerates.
SurfacePatch make_sphere(double rho);

// Flat chart x(t, phi) = (t, phi, 0) with constant normal (0, 0, 1).
SurfacePatch make_plane();

// Factory keyed by surface tag.  Exactly the parameters of the chosen tag
// must be supplied:
//   cylinder(r), anchor-ring(a, r), tube-circle(R, r), tube-helix(R, p, r),
//   sphere(rho), plane().
SurfacePatch make_surface(const std::string& tag,
                          const std::map<std::string, double>& params);

// First fundamental form at (t, phi).  Partials come from the exact chart
// jets.  Throws std::domain_error when (t, phi) is outside the rectangle and
// degenerate_point_error when EG - F^2 <= 0.
MetricData metric(const SurfacePatch& surface, double t, double phi);

// Mean curvature from the two fundamental forms,
//   H = (E N - 2 F M + G L) / (2 (E G - F^2)),
// with L = x_tt . n, M = x_tphi . n, N = x_phiphi . n.
double mean_curvature(const SurfacePatch& surface, double t, double phi);

// Sampling grid: m points along t, k along phi.  Periodic axes are sampled
// half-open (no duplicated seam column), closed axes include both endpoints.
struct Grid {
  int m = 32;
  int k = 32;
};

std::vector<std::pair<double, double>> grid_points(const ParamRect& rect,
                                                   const Grid& grid);

}  // namespace gaussfit
