#include "steklov/extension.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "steklov/fft.hpp"

namespace steklov {

ExtensionField::ExtensionField(const Domain& domain, const SteklovMode& mode, int upsample)
    : ExtensionField(domain, mode.trace.cast<Complex>(), mode.sigma, upsample) {}

ExtensionField::ExtensionField(const Domain& domain, const Eigen::VectorXcd& trace,
                               double sigma, int upsample)
    : domain_(domain), sigma_(sigma), upsample_(upsample) {
  if (upsample_ < 1) throw std::invalid_argument("ExtensionField: upsample must be >= 1");
  int ncomp = domain_.component_count();
  if (trace.size() % ncomp != 0)
    throw std::invalid_argument("ExtensionField: trace size not divisible by component count");
  n_coarse_ = static_cast<int>(trace.size()) / ncomp;
  build(trace);
}

void ExtensionField::build(const Eigen::VectorXcd& trace) {
  const int N = n_coarse_;
  const int M = N * upsample_;
  d_min_ = 0;
  for (int c = 0; c < domain_.component_count(); ++c) {
    const auto& curve = domain_.component(c);
    d_min_ = std::max(d_min_, 6.0 * curve.length() / static_cast<double>(M));
    std::vector<Complex> coarse(N);
    for (int j = 0; j < N; ++j) coarse[j] = trace(c * N + j);
    auto fine = fourier_upsample(coarse, upsample_);
    for (int j = 0; j < M; ++j) {
      double t = two_pi * j / M;
      FinePoint p;
      p.position = curve.position(t);
      p.outward_normal = curve.outward_normal(t);
      p.weight = (two_pi / M) * curve.speed(t);
      fine_.push_back(p);
      trace_fine_.push_back(fine[j]);
    }
  }
}

void ExtensionField::check_distance(const Vec2& z) const {
  auto foot = distance_to_boundary(domain_, z);  // throws if outside/on boundary
  if (foot.distance < d_min_) {
    std::ostringstream msg;
    msg << "ExtensionField: point (" << z.x() << ", " << z.y() << ") at distance "
        << foot.distance << " violates the reliable band d_min = " << d_min_;
    throw std::domain_error(msg.str());
  }
}

ExtensionField::SplitValue ExtensionField::evaluate_split(const Vec2& z) const {
  SplitValue out{0.0, 0.0};
  for (std::size_t j = 0; j < fine_.size(); ++j) {
    const auto& p = fine_[j];
    Vec2 d = p.position - z;
    double r2 = d.squaredNorm();
    double G = -0.5 * std::log(r2) / two_pi;           // -(1/2pi) log r
    double Nk = -p.outward_normal.dot(d) / (two_pi * r2);
    out.single_layer += G * p.weight * trace_fine_[j];
    out.double_layer += Nk * p.weight * trace_fine_[j];
  }
  return out;
}

Complex ExtensionField::evaluate(const Vec2& z) const {
  check_distance(z);
  auto s = evaluate_split(z);
  return sigma_ * s.single_layer - s.double_layer;
}

std::vector<Complex> ExtensionField::evaluate(const std::vector<Vec2>& points) const {
  std::ostringstream offenders;
  int bad = 0;
  for (const auto& z : points) {
    try {
      check_distance(z);
    } catch (const std::exception&) {
      if (bad < 8) offenders << " (" << z.x() << ", " << z.y() << ")";
      ++bad;
    }
  }
  if (bad > 0)
    throw std::domain_error("ExtensionField: " + std::to_string(bad) +
                            " point(s) violate the reliable band, first offenders:" +
                            offenders.str());
  std::vector<Complex> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    auto s = evaluate_split(points[i]);
    out[i] = sigma_ * s.single_layer - s.double_layer;
  });
  return out;
}

double ExtensionField::boundary_max_abs() const {
  double m = 0;
  for (const auto& v : trace_fine_) m = std::max(m, std::abs(v));
  return m;
}

MaxPrincipleReport max_principle_check(const ExtensionField& field,
                                       const std::vector<Vec2>& grid, double tolerance) {
  auto values = field.evaluate(grid);
  MaxPrincipleReport rep;
  for (const auto& v : values) rep.max_interior = std::max(rep.max_interior, std::abs(v));
  rep.max_boundary = field.boundary_max_abs();
  rep.ratio = rep.max_interior / rep.max_boundary;
  rep.pass = rep.ratio <= 1.0 + tolerance;
  return rep;
}

std::vector<Vec2> interior_grid(const Domain& domain, int per_side, double d_keep) {
  std::vector<Vec2> pts;
  Vec2 lo = domain.bbox_min(), hi = domain.bbox_max();
  for (int i = 0; i < per_side; ++i)
    for (int j = 0; j < per_side; ++j) {
      Vec2 p(lo.x() + (hi.x() - lo.x()) * (i + 0.5) / per_side,
             lo.y() + (hi.y() - lo.y()) * (j + 0.5) / per_side);
      if (!domain.contains(p)) continue;
      auto foot = distance_to_boundary(domain, p);
      if (foot.distance >= d_keep) pts.push_back(p);
    }
  return pts;
}

}  // namespace steklov
