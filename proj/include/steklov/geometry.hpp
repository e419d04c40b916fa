#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "steklov/util.hpp"

namespace steklov {

using Vec2 = Eigen::Vector2d;

/// Smooth closed curve q : [0, 2pi) -> R^2 supplied with analytic first and
/// second derivative evaluators. Orientation convention: the domain interior
/// lies on the left of the traversal direction, so outer components run
/// counterclockwise and hole components clockwise. With that convention the
/// signed curvature cross(q', q'')/|q'|^3 equals +1/R on the boundary of a
/// disk of radius R and -1/r0 on the inner circle of an annulus.
class BoundaryCurve {
 public:
  using Evaluator = std::function<Vec2(double)>;

  BoundaryCurve(Evaluator position, Evaluator derivative, Evaluator second_derivative,
                std::string label);

  Vec2 position(double t) const { return pos_(wrap_angle(t)); }
  Vec2 derivative(double t) const { return d1_(wrap_angle(t)); }
  Vec2 second_derivative(double t) const { return d2_(wrap_angle(t)); }

  double speed(double t) const { return derivative(t).norm(); }

  /// Unit normal pointing into the domain (left of the traversal direction).
  Vec2 inward_normal(double t) const;
  Vec2 outward_normal(double t) const { return -inward_normal(t); }

  /// Signed curvature cross(q', q'')/|q'|^3. Throws on a degenerate
  /// parametrization point (|q'| below tolerance).
  double signed_curvature(double t) const;

  double length() const { return length_; }
  double min_speed() const { return min_speed_; }
  /// Largest |curvature| over the construction-time sample grid.
  double max_abs_curvature() const { return max_abs_curvature_; }
  double min_curvature() const { return min_curvature_; }

  const std::string& label() const { return label_; }

  Vec2 bbox_min() const { return bbox_min_; }
  Vec2 bbox_max() const { return bbox_max_; }

 private:
  Evaluator pos_, d1_, d2_;
  std::string label_;
  double length_ = 0;
  double min_speed_ = 0;
  double max_abs_curvature_ = 0;
  double min_curvature_ = 0;
  Vec2 bbox_min_, bbox_max_;
};

/// Factories for the analytic curve families used throughout.
BoundaryCurve make_circle(double radius, Vec2 center = Vec2::Zero(), bool clockwise = false);
BoundaryCurve make_ellipse(double a, double b);
/// Radial graph r(theta) = c0 + sum_k (cos_coeffs[k-1] cos k theta +
/// sin_coeffs[k-1] sin k theta), traversed counterclockwise.
BoundaryCurve make_radial_fourier(double c0, const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs);

/// Planar domain bounded by one or more closed analytic curves.
class Domain {
 public:
  explicit Domain(std::vector<BoundaryCurve> components, std::string label = "domain");

  const std::vector<BoundaryCurve>& components() const { return components_; }
  const BoundaryCurve& component(int i) const { return components_.at(i); }
  int component_count() const { return static_cast<int>(components_.size()); }

  const std::string& label() const { return label_; }

  Vec2 bbox_min() const { return bbox_min_; }
  Vec2 bbox_max() const { return bbox_max_; }
  double bbox_diameter() const { return (bbox_max_ - bbox_min_).norm(); }

  /// Point membership by even-odd crossing count against a fine polyline.
  bool contains(const Vec2& p) const;

  /// Infimum of the signed curvature over all boundary components, located by
  /// dense sampling plus local parabolic refinement.
  double inf_curvature() const;

  /// Distance along the inward normal beyond which Fermi coordinates may
  /// fold: half the minimal radius of curvature.
  double fold_warning_distance() const;

 private:
  std::vector<BoundaryCurve> components_;
  std::string label_;
  Vec2 bbox_min_, bbox_max_;
  std::vector<std::vector<Vec2>> polylines_;  // membership-test cache
};

Domain make_disk_domain(double radius);
Domain make_ellipse_domain(double a, double b);
/// Annulus r0 < |z| < R: outer circle counterclockwise, inner clockwise.
Domain make_annulus_domain(double r0, double R = 1.0);
Domain make_radial_fourier_domain(double c0, const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs);

/// Foot point of the boundary-distance projection: position equals
/// q_c(t_foot) + distance * inward_normal_c(t_foot).
struct FermiPoint {
  int component = 0;
  double t_foot = 0;
  double distance = 0;
  Vec2 position = Vec2::Zero();
};

/// curve_point convenience wrapper (q at wrapped parameter).
inline Vec2 curve_point(const BoundaryCurve& curve, double t) { return curve.position(t); }

/// Euclidean distance from a strictly interior point to the boundary, with
/// the realizing foot point. Seeds from a dense parameter grid and refines by
/// Newton iteration on the squared distance; throws if x is outside or on the
/// boundary.
FermiPoint distance_to_boundary(const Domain& domain, const Vec2& x);

struct FermiMapResult {
  Vec2 position;
  bool fold_warning = false;  // set when distance exceeds half the minimal curvature radius
};

/// Map Fermi coordinates (component, t_foot, distance >= 0) to Cartesian.
FermiMapResult fermi_to_cartesian(const Domain& domain, int component, double t_foot,
                                  double distance);

/// Total turning integral of the signed curvature with respect to arclength,
/// by trapezoid quadrature at n nodes. Equals 2pi for a simple
/// counterclockwise curve.
double total_turning(const BoundaryCurve& curve, int n = 2048);

}  // namespace steklov
