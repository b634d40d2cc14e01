#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace gaussfit::fd {

// Central-difference step sizes. The scale factor keeps steps sane for
// arguments far from the origin.
inline double step_first(double t) {
  static const double h = std::cbrt(std::numeric_limits<double>::epsilon());
  return h * std::max(1.0, std::abs(t));
}

inline double step_second(double t) {
  static const double h =
      std::pow(std::numeric_limits<double>::epsilon(), 0.25);
  return h * std::max(1.0, std::abs(t));
}

inline double derivative1(const std::function<double(double)>& f, double t) {
  const double h = step_first(t);
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

inline double derivative2(const std::function<double(double)>& f, double t) {
  const double h = step_second(t);
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

// Mixed second partial of a two-argument function.
inline double derivative_mixed(const std::function<double(double, double)>& f,
                               double u, double v) {
  const double hu = step_second(u);
  const double hv = step_second(v);
  return (f(u + hu, v + hv) - f(u + hu, v - hv) - f(u - hu, v + hv) +
          f(u - hu, v - hv)) /
         (4.0 * hu * hv);
}

}  // namespace gaussfit::fd
