#include "gaussfit/curves.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "gaussfit/numdiff.hpp"

namespace gaussfit {

FrenetCurve::FrenetCurve(std::string tag, std::map<std::string, double> params,
                         std::function<FrenetData(double)> eval, double t_min,
                         double t_max, bool periodic)
    : tag_(std::move(tag)),
      params_(std::move(params)),
      eval_(std::move(eval)),
      t_min_(t_min),
      t_max_(t_max),
      periodic_(periodic) {
  if (!(t_min_ < t_max_))
    throw std::invalid_argument("FrenetCurve: empty parameter interval");
}

bool FrenetCurve::contains(double t) const {
  if (periodic_) return true;
  const double slack = 1e-9 * std::max(1.0, std::abs(t_max_) + std::abs(t_min_));
  return t >= t_min_ - slack && t <= t_max_ + slack;
}

double FrenetCurve::max_curvature(int samples) const {
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t =
        t_min_ + (t_max_ - t_min_) * static_cast<double>(i) / (samples - 1);
    sup = std::max(sup, std::abs(eval_(t).curvature));
  }
  return sup;
}

FrenetCurve make_line() {
  auto eval = [](double t) {
    FrenetData d;
    d.position = Vec3(t, 0.0, 0.0);
    d.tangent = Vec3::UnitX();
    d.normal = Vec3::UnitY();
    d.binormal = Vec3::UnitZ();
    return d;
  };
  return FrenetCurve("line", {}, eval, -M_PI, M_PI, false);
}

FrenetCurve make_circle(double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("make_circle: radius must be positive");
  const double kappa = 1.0 / radius;
  auto eval = [radius, kappa](double t) {
    const double a = t / radius;  // turning angle
    const double c = std::cos(a), s = std::sin(a);
    FrenetData d;
    d.position = Vec3(radius * c, radius * s, 0.0);
    d.tangent = Vec3(-s, c, 0.0);
    d.normal = Vec3(-c, -s, 0.0);
    d.binormal = Vec3(0.0, 0.0, 1.0);
    d.curvature = kappa;
    return d;
  };
  return FrenetCurve("circle", {{"R", radius}}, eval, 0.0,
                     2.0 * M_PI * radius, true);
}

FrenetCurve make_helix(double radius, double pitch) {
  if (!(radius > 0.0))
    throw std::invalid_argument("make_helix: radius must be positive");
  if (pitch == 0.0)
    throw std::invalid_argument("make_helix: pitch must be nonzero");
  const double denom = radius * radius + pitch * pitch;
  const double omega = 1.0 / std::sqrt(denom);  // unit-speed angular rate
  const double kappa = radius / denom;
  const double tau = pitch / denom;
  auto eval = [=](double t) {
    const double a = omega * t;
    const double c = std::cos(a), s = std::sin(a);
    FrenetData d;
    d.position = Vec3(radius * c, radius * s, pitch * omega * t);
    d.tangent = Vec3(-radius * omega * s, radius * omega * c, pitch * omega);
    d.normal = Vec3(-c, -s, 0.0);
    d.binormal = Vec3(pitch * omega * s, -pitch * omega * c, radius * omega);
    d.curvature = kappa;
    d.torsion = tau;
    return d;
  };
  const double turn = 2.0 * M_PI / omega;  // arclength of one full turn
  return FrenetCurve("helix", {{"R", radius}, {"p", pitch}}, eval, 0.0, turn,
                     false);
}

FrenetResiduals frenet_residuals(const FrenetCurve& curve, double t) {
  if (!curve.contains(t))
    throw std::domain_error("frenet_residuals: t outside curve domain");

  const double h = fd::step_first(t);
  const FrenetData lo = curve.at(t - h);
  const FrenetData hi = curve.at(t + h);
  const FrenetData mid = curve.at(t);
  const Vec3 d_tangent = (hi.tangent - lo.tangent) / (2.0 * h);
  const Vec3 d_normal = (hi.normal - lo.normal) / (2.0 * h);
  const Vec3 d_binormal = (hi.binormal - lo.binormal) / (2.0 * h);

  FrenetResiduals r;
  r.tangent = (d_tangent - mid.curvature * mid.normal).norm();
  r.normal =
      (d_normal + mid.curvature * mid.tangent - mid.torsion * mid.binormal)
          .norm();
  r.binormal = (d_binormal + mid.torsion * mid.normal).norm();
  return r;
}

}  // namespace gaussfit
