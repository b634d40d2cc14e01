#include "gaussfit/surfaces.hpp"

#include <cmath>
#include <sstream>

namespace gaussfit {

namespace {

std::string param_list(const std::map<std::string, double>& params) {
  std::ostringstream out;
  bool first = true;
  for (const auto& entry : params) {
    if (!first) out << ", ";
    out << entry.first;
    first = false;
  }
  return out.str();
}

void expect_params(const std::string& tag,
                   const std::map<std::string, double>& given,
                   const std::vector<std::string>& wanted) {
  bool match = given.size() == wanted.size();
  for (const auto& key : wanted)
    if (!given.count(key)) match = false;
  if (!match) {
    std::ostringstream out;
    out << "make_surface: surface '" << tag << "' takes parameters {";
    for (std::size_t i = 0; i < wanted.size(); ++i)
      out << (i ? ", " : "") << wanted[i];
    out << "}, got {" << param_list(given) << "}";
    throw std::invalid_argument(out.str());
  }
}

std::vector<double> axis_samples(double lo, double hi, int n, bool periodic) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (periodic) {
    for (int i = 0; i < n; ++i)
      out.push_back(lo + (hi - lo) * static_cast<double>(i) / n);
  } else if (n == 1) {
    out.push_back(0.5 * (lo + hi));
  } else {
    for (int i = 0; i < n; ++i)
      out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  }
  return out;
}

}  // namespace

bool ParamRect::contains(double t, double phi) const {
  const double slack_t = 1e-9 * std::max(1.0, std::abs(t0) + std::abs(t1));
  const double slack_phi =
      1e-9 * std::max(1.0, std::abs(phi0) + std::abs(phi1));
  const bool t_ok = t_periodic || (t >= t0 - slack_t && t <= t1 + slack_t);
  const bool phi_ok =
      phi_periodic || (phi >= phi0 - slack_phi && phi <= phi1 + slack_phi);
  return t_ok && phi_ok;
}

SurfacePatch::SurfacePatch(std::string tag,
                           std::map<std::string, double> params,
                           std::function<SurfaceJet(double, double)> eval,
                           ParamRect rect, std::optional<TubeShape> tube)
    : tag_(std::move(tag)),
      params_(std::move(params)),
      eval_(std::move(eval)),
      rect_(rect),
      tube_(std::move(tube)) {}

SurfacePatch make_tube(const FrenetCurve& directrix, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("make_tube: radius must be positive");
  const double sup_kappa = directrix.max_curvature();
  if (sup_kappa > 0.0 && !(r < 1.0 / sup_kappa))
    throw std::invalid_argument(
        "make_tube: radius must be below the directrix curvature radius");

  auto eval = [curve = directrix, r](double t, double phi) {
    const FrenetData f = curve.at(t);
    const double c = std::cos(phi), s = std::sin(phi);
    const double kappa = f.curvature, tau = f.torsion;
    const double kr = f.curvature_rate, tr = f.torsion_rate;
    const double delta = 1.0 - r * kappa * c;
    const Vec3 T = f.tangent, H = f.normal, B = f.binormal;

    SurfaceJet j;
    j.x = f.position + r * c * H + r * s * B;
    j.x_t = delta * T - r * tau * s * H + r * tau * c * B;
    j.x_phi = -r * s * H + r * c * B;
    j.x_tt = (-r * kr * c + r * kappa * tau * s) * T +
             (delta * kappa - r * tr * s - r * tau * tau * c) * H +
             (-r * tau * tau * s + r * tr * c) * B;
    j.x_tphi = r * kappa * s * T - r * tau * c * H - r * tau * s * B;
    j.x_phiphi = -r * c * H - r * s * B;

    j.n = -(c * H + s * B);
    j.n_t = kappa * c * T + tau * s * H - tau * c * B;
    j.n_phi = s * H - c * B;
    j.n_tt = (kr * c - kappa * tau * s) * T +
             (kappa * kappa * c + tr * s + tau * tau * c) * H +
             (tau * tau * s - tr * c) * B;
    j.n_tphi = -kappa * s * T + tau * c * H + tau * s * B;
    j.n_phiphi = c * H + s * B;
    return j;
  };

  ParamRect rect;
  rect.t0 = directrix.t_min();
  rect.t1 = directrix.t_max();
  rect.t_periodic = directrix.periodic();
  rect.phi0 = 0.0;
  rect.phi1 = 2.0 * M_PI;
  rect.phi_periodic = true;

  std::map<std::string, double> params = directrix.params();
  params["r"] = r;
  return SurfacePatch("tube-" + directrix.tag(), std::move(params), eval, rect,
                      TubeShape{r, directrix});
}

SurfacePatch make_anchor_ring(double a, double r) {
  if (!(r > 0.0) || !(a > r))
    throw std::invalid_argument("make_anchor_ring: need a > r > 0");

  auto eval = [a, r](double t, double phi) {
    const double ct = std::cos(t), st = std::sin(t);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double gamma = a + r * ct;
    const double gamma_t = -r * st;
    const double gamma_tt = -r * ct;

    SurfaceJet j;
    j.x = Vec3(gamma * cp, gamma * sp, r * st);
    j.x_t = Vec3(gamma_t * cp, gamma_t * sp, r * ct);
    j.x_phi = Vec3(-gamma * sp, gamma * cp, 0.0);
    j.x_tt = Vec3(gamma_tt * cp, gamma_tt * sp, -r * st);
    j.x_tphi = Vec3(-gamma_t * sp, gamma_t * cp, 0.0);
    j.x_phiphi = Vec3(-gamma * cp, -gamma * sp, 0.0);

    j.n = Vec3(-ct * cp, -ct * sp, -st);
    j.n_t = Vec3(st * cp, st * sp, -ct);
    j.n_phi = Vec3(ct * sp, -ct * cp, 0.0);
    j.n_tt = Vec3(ct * cp, ct * sp, st);
    j.n_tphi = Vec3(-st * sp, st * cp, 0.0);
    j.n_phiphi = Vec3(ct * cp, ct * sp, 0.0);
    return j;
  };

  ParamRect rect;
  rect.t0 = 0.0;
  rect.t1 = 2.0 * M_PI;
  rect.t_periodic = true;
  rect.phi0 = 0.0;
  rect.phi1 = 2.0 * M_PI;
  rect.phi_periodic = true;
  return SurfacePatch("anchor-ring", {{"a", a}, {"r", r}}, eval, rect);
}

SurfacePatch make_cylinder(double r) {
  if (!(r > 0.0))
    throw std::invalid_argument("make_cylinder: radius must be positive");

  auto eval = [r](double t, double phi) {
    const double cp = std::cos(phi), sp = std::sin(phi);
    SurfaceJet j;
    j.x = Vec3(r * cp, r * sp, t);
    j.x_t = Vec3(0.0, 0.0, 1.0);
    j.x_phi = Vec3(-r * sp, r * cp, 0.0);
    j.x_tt = Vec3::Zero();
    j.x_tphi = Vec3::Zero();
    j.x_phiphi = Vec3(-r * cp, -r * sp, 0.0);

    j.n = Vec3(-cp, -sp, 0.0);
    j.n_t = Vec3::Zero();
    j.n_phi = Vec3(sp, -cp, 0.0);
    j.n_tt = Vec3::Zero();
    j.n_tphi = Vec3::Zero();
    j.n_phiphi = Vec3(cp, sp, 0.0);
    return j;
  };

  ParamRect rect;
  rect.t0 = -M_PI;
  rect.t1 = M_PI;
  rect.phi0 = 0.0;
  rect.phi1 = 2.0 * M_PI;
  rect.phi_periodic = true;
  return SurfacePatch("cylinder", {{"r", r}}, eval, rect);
}

SurfacePatch make_sphere(double rho) {
  if (!(rho > 0.0))
    throw std::invalid_argument("make_sphere: radius must be positive");

  auto eval = [rho](double t, double phi) {
    const double ct = std::cos(t), st = std::sin(t);
    const double cp = std::cos(phi), sp = std::sin(phi);
    SurfaceJet j;
    j.n = Vec3(ct * cp, ct * sp, st);
    j.n_t = Vec3(-st * cp, -st * sp, ct);
    j.n_phi = Vec3(-ct * sp, ct * cp, 0.0);
    j.n_tt = -j.n;
    j.n_tphi = Vec3(st * sp, -st * cp, 0.0);
    j.n_phiphi = Vec3(-ct * cp, -ct * sp, 0.0);

    j.x = rho * j.n;
    j.x_t = rho * j.n_t;
    j.x_phi = rho * j.n_phi;
    j.x_tt = rho * j.n_tt;
    j.x_tphi = rho * j.n_tphi;
    j.x_phiphi = rho * j.n_phiphi;
    return j;
  };

  // Keep away from the polar coordinate singularities.
  const double margin = 1e-3;
  ParamRect rect;
  rect.t0 = -0.5 * M_PI + margin;
  rect.t1 = 0.5 * M_PI - margin;
  rect.phi0 = 0.0;
  rect.phi1 = 2.0 * M_PI;
  rect.phi_periodic = true;
  return SurfacePatch("sphere", {{"rho", rho}}, eval, rect);
}

SurfacePatch make_plane() {
  auto eval = [](double t, double phi) {
    SurfaceJet j;
    j.x = Vec3(t, phi, 0.0);
    j.x_t = Vec3::UnitX();
    j.x_phi = Vec3::UnitY();
    j.x_tt = Vec3::Zero();
    j.x_tphi = Vec3::Zero();
    j.x_phiphi = Vec3::Zero();

    j.n = Vec3::UnitZ();
    j.n_t = Vec3::Zero();
    j.n_phi = Vec3::Zero();
    j.n_tt = Vec3::Zero();
    j.n_tphi = Vec3::Zero();
    j.n_phiphi = Vec3::Zero();
    return j;
  };

  ParamRect rect;
  rect.t0 = -1.0;
  rect.t1 = 1.0;
  rect.phi0 = -1.0;
  rect.phi1 = 1.0;
  return SurfacePatch("plane", {}, eval, rect);
}

SurfacePatch make_surface(const std::string& tag,
                          const std::map<std::string, double>& params) {
  if (tag == "cylinder") {
    expect_params(tag, params, {"r"});
    return make_cylinder(params.at("r"));
  }
  if (tag == "anchor-ring") {
    expect_params(tag, params, {"a", "r"});
    return make_anchor_ring(params.at("a"), params.at("r"));
  }
  if (tag == "tube-circle") {
    expect_params(tag, params, {"R", "r"});
    return make_tube(make_circle(params.at("R")), params.at("r"));
  }
  if (tag == "tube-helix") {
    expect_params(tag, params, {"R", "p", "r"});
    return make_tube(make_helix(params.at("R"), params.at("p")),
                     params.at("r"));
  }
  if (tag == "sphere") {
    expect_params(tag, params, {"rho"});
    return make_sphere(params.at("rho"));
  }
  if (tag == "plane") {
    expect_params(tag, params, {});
    return make_plane();
  }
  throw std::invalid_argument("make_surface: unknown surface tag '" + tag +
                              "'");
}

MetricData metric(const SurfacePatch& surface, double t, double phi) {
  if (!surface.rect().contains(t, phi))
    throw std::domain_error("metric: point outside parameter rectangle");

  const SurfaceJet j = surface.jet(t, phi);
  MetricData m;
  m.E = j.x_t.dot(j.x_t);
  m.F = j.x_t.dot(j.x_phi);
  m.G = j.x_phi.dot(j.x_phi);
  m.E_t = 2.0 * j.x_tt.dot(j.x_t);
  m.E_phi = 2.0 * j.x_tphi.dot(j.x_t);
  m.F_t = j.x_tt.dot(j.x_phi) + j.x_t.dot(j.x_tphi);
  m.F_phi = j.x_tphi.dot(j.x_phi) + j.x_t.dot(j.x_phiphi);
  m.G_t = 2.0 * j.x_tphi.dot(j.x_phi);
  m.G_phi = 2.0 * j.x_phiphi.dot(j.x_phi);

  const double disc = m.E * m.G - m.F * m.F;
  if (!(disc > 0.0))
    throw degenerate_point_error("metric: first fundamental form degenerates");
  m.W = std::sqrt(disc);
  return m;
}

double mean_curvature(const SurfacePatch& surface, double t, double phi) {
  const MetricData m = metric(surface, t, phi);
  const SurfaceJet j = surface.jet(t, phi);
  const double L = j.x_tt.dot(j.n);
  const double M = j.x_tphi.dot(j.n);
  const double N = j.x_phiphi.dot(j.n);
  return (m.E * N - 2.0 * m.F * M + m.G * L) / (2.0 * (m.E * m.G - m.F * m.F));
}

std::vector<std::pair<double, double>> grid_points(const ParamRect& rect,
                                                   const Grid& grid) {
  if (grid.m < 1 || grid.k < 1)
    throw std::invalid_argument("grid_points: grid must be at least 1x1");
  const std::vector<double> ts =
      axis_samples(rect.t0, rect.t1, grid.m, rect.t_periodic);
  const std::vector<double> phis =
      axis_samples(rect.phi0, rect.phi1, grid.k, rect.phi_periodic);
  std::vector<std::pair<double, double>> points;
  points.reserve(ts.size() * phis.size());
  for (double t : ts)
    for (double phi : phis) points.emplace_back(t, phi);
  return points;
}

}  // namespace gaussfit
