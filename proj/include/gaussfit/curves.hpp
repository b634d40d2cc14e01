#pragma once

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>

namespace gaussfit {

using Vec3 = Eigen::Vector3d;

// Frenet data of a unit-speed space curve at one parameter value.  The frame
// follows the convention
//   tangent'  =  curvature * normal
//   normal'   = -curvature * tangent + torsion * binormal
//   binormal' = -torsion * normal
// with ' denoting the arclength derivative.  curvature_rate / torsion_rate
// are the arclength derivatives of curvature and torsion (zero for all
// built-in curves, which have constant invariants).
struct FrenetData {
  Vec3 position = Vec3::Zero();
  Vec3 tangent = Vec3::UnitX();
  Vec3 normal = Vec3::UnitY();
  Vec3 binormal = Vec3::UnitZ();
  double curvature = 0.0;
  double torsion = 0.0;
  double curvature_rate = 0.0;
  double torsion_rate = 0.0;
};

// Immutable description of a unit-speed curve: a closed-form evaluator plus
// its parameter interval.  Evaluators are total functions; the interval is
// the range grids and validation sample from.
class FrenetCurve {
 public:
  FrenetCurve(std::string tag, std::map<std::string, double> params,
              std::function<FrenetData(double)> eval, double t_min,
              double t_max, bool periodic);

  const std::string& tag() const { return tag_; }
  const std::map<std::string, double>& params() const { return params_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }
  bool periodic() const { return periodic_; }

  // Periodic curves accept every t; otherwise t must lie in the interval
  // (up to a small rounding slack).
  bool contains(double t) const;

  FrenetData at(double t) const { return eval_(t); }
  Vec3 position(double t) const { return eval_(t).position; }
  double curvature(double t) const { return eval_(t).curvature; }
  double torsion(double t) const { return eval_(t).torsion; }

  // sup of |curvature| over the interval, estimated by dense sampling.
  double max_curvature(int samples = 512) const;

 private:
  std::string tag_;
  std::map<std::string, double> params_;
  std::function<FrenetData(double)> eval_;
  double t_min_;
  double t_max_;
  bool periodic_;
};

// Straight line along the x axis with a fixed parallel frame.
FrenetCurve make_line();

// Circle of the given radius in the xy plane, centred at the origin.
FrenetCurve make_circle(double radius);

// Circular helix of radius `radius` and pitch parameter `pitch`, unit-speed.
// curvature = radius / (radius^2 + pitch^2), torsion = pitch / (radius^2 +
// pitch^2).
FrenetCurve make_helix(double radius, double pitch);

// Norms of the three Frenet equation defects at t, with frame derivatives
// taken by central finite differences:
//   tangent  : |tangent' - curvature * normal|
//   normal   : |normal' + curvature * tangent - torsion * binormal|
//   binormal : |binormal' + torsion * normal|
struct FrenetResiduals {
  double tangent = 0.0;
  double normal = 0.0;
  double binormal = 0.0;
};

FrenetResiduals frenet_residuals(const FrenetCurve& curve, double t);

}  // namespace gaussfit
