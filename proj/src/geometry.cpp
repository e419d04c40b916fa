#include "steklov/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace steklov {

namespace {

constexpr int kScanSamples = 4096;
constexpr double kSpeedTolerance = 1e-12;

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

BoundaryCurve::BoundaryCurve(Evaluator position, Evaluator derivative,
                             Evaluator second_derivative, std::string label)
    : pos_(std::move(position)),
      d1_(std::move(derivative)),
      d2_(std::move(second_derivative)),
      label_(std::move(label)) {
  // Closure check on the raw (unwrapped) evaluator.
  Vec2 p0 = pos_(0.0), p1 = pos_(two_pi);
  double scale = std::max(1.0, p0.norm());
  if ((p0 - p1).norm() > 1e-9 * scale)
    throw std::invalid_argument("BoundaryCurve '" + label_ + "': parametrization is not 2pi-periodic");

  min_speed_ = std::numeric_limits<double>::max();
  min_curvature_ = std::numeric_limits<double>::max();
  max_abs_curvature_ = 0;
  bbox_min_ = Vec2(std::numeric_limits<double>::max(), std::numeric_limits<double>::max());
  bbox_max_ = -bbox_min_;
  length_ = 0;
  for (int i = 0; i < kScanSamples; ++i) {
    double t = two_pi * i / kScanSamples;
    Vec2 p = pos_(t);
    Vec2 d = d1_(t);
    double sp = d.norm();
    min_speed_ = std::min(min_speed_, sp);
    length_ += sp * (two_pi / kScanSamples);
    bbox_min_ = bbox_min_.cwiseMin(p);
    bbox_max_ = bbox_max_.cwiseMax(p);
    if (sp > kSpeedTolerance) {
      double kappa = cross2(d, d2_(t)) / (sp * sp * sp);
      min_curvature_ = std::min(min_curvature_, kappa);
      max_abs_curvature_ = std::max(max_abs_curvature_, std::abs(kappa));
    }
  }
  if (min_speed_ <= kSpeedTolerance)
    throw std::invalid_argument("BoundaryCurve '" + label_ + "': parametrization degenerates (|q'| ~ 0)");
}

Vec2 BoundaryCurve::inward_normal(double t) const {
  Vec2 d = derivative(t);
  double sp = d.norm();
  if (sp <= kSpeedTolerance)
    throw std::domain_error("BoundaryCurve '" + label_ + "': degenerate point, no normal");
  return Vec2(-d.y(), d.x()) / sp;
}

double BoundaryCurve::signed_curvature(double t) const {
  Vec2 d = derivative(t);
  double sp = d.norm();
  if (sp <= kSpeedTolerance)
    throw std::domain_error("BoundaryCurve '" + label_ + "': degenerate point, curvature undefined");
  return cross2(d, second_derivative(t)) / (sp * sp * sp);
}

BoundaryCurve make_circle(double radius, Vec2 center, bool clockwise) {
  if (radius <= 0) throw std::invalid_argument("make_circle: radius must be positive");
  double s = clockwise ? -1.0 : 1.0;
  auto pos = [=](double t) { return Vec2(center.x() + radius * std::cos(s * t),
                                         center.y() + radius * std::sin(s * t)); };
  auto d1 = [=](double t) { return Vec2(-s * radius * std::sin(s * t),
                                        s * radius * std::cos(s * t)); };
  auto d2 = [=](double t) { return Vec2(-radius * std::cos(s * t),
                                        -radius * std::sin(s * t)); };
  return BoundaryCurve(pos, d1, d2, clockwise ? "circle-cw" : "circle");
}

BoundaryCurve make_ellipse(double a, double b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("make_ellipse: semi-axes must be positive");
  auto pos = [=](double t) { return Vec2(a * std::cos(t), b * std::sin(t)); };
  auto d1 = [=](double t) { return Vec2(-a * std::sin(t), b * std::cos(t)); };
  auto d2 = [=](double t) { return Vec2(-a * std::cos(t), -b * std::sin(t)); };
  return BoundaryCurve(pos, d1, d2, "ellipse");
}

BoundaryCurve make_radial_fourier(double c0, const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs) {
  auto radius = [=](double t, int order) {
    // order = 0,1,2: r, r', r''
    double v = order == 0 ? c0 : 0.0;
    for (std::size_t j = 0; j < cos_coeffs.size(); ++j) {
      double k = static_cast<double>(j + 1);
      double kp = std::pow(k, order);
      switch (order) {
        case 0: v += cos_coeffs[j] * std::cos(k * t); break;
        case 1: v += -kp * cos_coeffs[j] * std::sin(k * t); break;
        default: v += -kp * cos_coeffs[j] * std::cos(k * t); break;
      }
    }
    for (std::size_t j = 0; j < sin_coeffs.size(); ++j) {
      double k = static_cast<double>(j + 1);
      double kp = std::pow(k, order);
      switch (order) {
        case 0: v += sin_coeffs[j] * std::sin(k * t); break;
        case 1: v += kp * sin_coeffs[j] * std::cos(k * t); break;
        default: v += -kp * sin_coeffs[j] * std::sin(k * t); break;
      }
    }
    return v;
  };
  auto pos = [=](double t) {
    double r = radius(t, 0);
    return Vec2(r * std::cos(t), r * std::sin(t));
  };
  auto d1 = [=](double t) {
    double r = radius(t, 0), rp = radius(t, 1);
    return Vec2(rp * std::cos(t) - r * std::sin(t), rp * std::sin(t) + r * std::cos(t));
  };
  auto d2 = [=](double t) {
    double r = radius(t, 0), rp = radius(t, 1), rpp = radius(t, 2);
    return Vec2(rpp * std::cos(t) - 2 * rp * std::sin(t) - r * std::cos(t),
                rpp * std::sin(t) + 2 * rp * std::cos(t) - r * std::sin(t));
  };
  return BoundaryCurve(pos, d1, d2, "radial-fourier");
}

Domain::Domain(std::vector<BoundaryCurve> components, std::string label)
    : components_(std::move(components)), label_(std::move(label)) {
  if (components_.empty()) throw std::invalid_argument("Domain: needs at least one component");
  bbox_min_ = components_[0].bbox_min();
  bbox_max_ = components_[0].bbox_max();
  for (const auto& c : components_) {
    bbox_min_ = bbox_min_.cwiseMin(c.bbox_min());
    bbox_max_ = bbox_max_.cwiseMax(c.bbox_max());
  }
  for (const auto& c : components_) {
    std::vector<Vec2> poly(2048);
    for (int i = 0; i < 2048; ++i) poly[i] = c.position(two_pi * i / 2048);
    polylines_.push_back(std::move(poly));
  }
}

bool Domain::contains(const Vec2& p) const {
  // Even-odd rule over all components: inside the outer curve and outside an
  // even number of holes.
  int crossings = 0;
  for (const auto& poly : polylines_) {
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = poly[i];
      const Vec2& b = poly[(i + 1) % n];
      if ((a.y() > p.y()) == (b.y() > p.y())) continue;
      double xcross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (xcross > p.x()) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

double Domain::inf_curvature() const {
  double best = std::numeric_limits<double>::max();
  for (const auto& c : components_) {
    const int n = 2048;
    int argmin = 0;
    double vmin = std::numeric_limits<double>::max();
    for (int i = 0; i < n; ++i) {
      double v = c.signed_curvature(two_pi * i / n);
      if (v < vmin) {
        vmin = v;
        argmin = i;
      }
    }
    // Parabolic refinement around the grid minimizer.
    double h = two_pi / n;
    double t0 = two_pi * argmin / n;
    double fm = c.signed_curvature(t0 - h), f0 = vmin, fp = c.signed_curvature(t0 + h);
    double denom = fm - 2 * f0 + fp;
    double refined = f0;
    if (std::abs(denom) > 1e-300) {
      double dt = 0.5 * h * (fm - fp) / denom;
      refined = c.signed_curvature(t0 + dt);
    }
    best = std::min(best, std::min(f0, refined));
  }
  return best;
}

double Domain::fold_warning_distance() const {
  double kmax = 0;
  for (const auto& c : components_) kmax = std::max(kmax, c.max_abs_curvature());
  if (kmax <= 0) return std::numeric_limits<double>::max();
  return 0.5 / kmax;
}

Domain make_disk_domain(double radius) {
  std::vector<BoundaryCurve> comps;
  comps.push_back(make_circle(radius));
  return Domain(std::move(comps), "disk");
}

Domain make_ellipse_domain(double a, double b) {
  std::vector<BoundaryCurve> comps;
  comps.push_back(make_ellipse(a, b));
  return Domain(std::move(comps), "ellipse");
}

Domain make_annulus_domain(double r0, double R) {
  if (!(0 < r0 && r0 < R))
    throw std::invalid_argument("make_annulus_domain: need 0 < r0 < R");
  std::vector<BoundaryCurve> comps;
  comps.push_back(make_circle(R));
  comps.push_back(make_circle(r0, Vec2::Zero(), /*clockwise=*/true));
  return Domain(std::move(comps), "annulus");
}

Domain make_radial_fourier_domain(double c0, const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs) {
  std::vector<BoundaryCurve> comps;
  comps.push_back(make_radial_fourier(c0, cos_coeffs, sin_coeffs));
  return Domain(std::move(comps), "radial-fourier");
}

FermiPoint distance_to_boundary(const Domain& domain, const Vec2& x) {
  if (!domain.contains(x))
    throw std::domain_error("distance_to_boundary: point is outside the domain");

  FermiPoint best;
  best.distance = std::numeric_limits<double>::max();
  for (int c = 0; c < domain.component_count(); ++c) {
    const auto& curve = domain.component(c);
    const int n = kScanSamples;
    double tbest = 0, dbest = std::numeric_limits<double>::max();
    for (int i = 0; i < n; ++i) {
      double t = two_pi * i / n;
      double d = (x - curve.position(t)).squaredNorm();
      if (d < dbest) {
        dbest = d;
        tbest = t;
      }
    }
    // Newton on the stationarity condition (x - q(t)) . q'(t) = 0.
    double t = tbest;
    for (int it = 0; it < 60; ++it) {
      Vec2 r = x - curve.position(t);
      Vec2 d1 = curve.derivative(t);
      Vec2 d2 = curve.second_derivative(t);
      double g = -r.dot(d1);
      double gp = d1.squaredNorm() - r.dot(d2);
      if (std::abs(gp) < 1e-300) break;
      double step = g / gp;
      t -= step;
      if (std::abs(step) < 1e-12) break;
    }
    t = wrap_angle(t);
    double dist = (x - curve.position(t)).norm();
    if (dist < best.distance) {
      best.component = c;
      best.t_foot = t;
      best.distance = dist;
      best.position = x;
    }
  }
  if (best.distance <= 1e-14 * std::max(1.0, domain.bbox_diameter()))
    throw std::domain_error("distance_to_boundary: point lies on the boundary");
  return best;
}

FermiMapResult fermi_to_cartesian(const Domain& domain, int component, double t_foot,
                                  double distance) {
  if (distance < 0)
    throw std::invalid_argument("fermi_to_cartesian: distance must be nonnegative");
  const auto& curve = domain.component(component);
  FermiMapResult out;
  out.position = curve.position(t_foot) + distance * curve.inward_normal(t_foot);
  out.fold_warning = distance > domain.fold_warning_distance();
  return out;
}

double total_turning(const BoundaryCurve& curve, int n) {
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    double t = two_pi * i / n;
    acc += curve.signed_curvature(t) * curve.speed(t);
  }
  return acc * two_pi / n;
}

}  // namespace steklov
