#include "steklov/fbi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "steklov/fft.hpp"

namespace steklov::fbi {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kOverlapTolerance = 1e-10;
constexpr double kTailExponentCutoff = 40.0;  // e^{-40} ~ 4e-18, below double noise

bool is_standard_periodic(const std::vector<double>& grid) {
  int n = static_cast<int>(grid.size());
  for (int i = 0; i < n; ++i)
    if (std::abs(grid[i] - two_pi * i / n) > 1e-12) return false;
  return true;
}

}  // namespace

PhaseSpaceGrids PhaseSpaceGrids::make(int n_x, double xi_min, double xi_max, int n_xi) {
  if (n_x < 2 || n_xi < 2) throw std::invalid_argument("PhaseSpaceGrids: need >= 2 points per axis");
  if (!(xi_min < xi_max)) throw std::invalid_argument("PhaseSpaceGrids: xi_min < xi_max required");
  PhaseSpaceGrids g;
  g.alpha_x = periodic_grid(n_x);
  g.alpha_xi = linspace(xi_min, xi_max, n_xi);
  return g;
}

PhaseSpaceGrids PhaseSpaceGrids::defaults(int n_x) { return make(n_x, -3.0, 3.0, 601); }

PhaseSpaceTable fbi_geo_circle(const std::vector<Complex>& samples, double h,
                               const PhaseSpaceGrids& grids) {
  if (!(h > 0)) throw std::invalid_argument("fbi_geo_circle: h must be positive");
  if (std::exp(-pi * pi / (2.0 * h)) > kOverlapTolerance)
    throw std::invalid_argument(
        "fbi_geo_circle: h too large, periodized Gaussian images overlap beyond tolerance");

  const int N = static_cast<int>(samples.size());
  const int n_x = static_cast<int>(grids.alpha_x.size());
  const int n_xi = static_cast<int>(grids.alpha_xi.size());
  const double C = std::pow(2.0, -0.5) * std::pow(pi * h, -0.75) * (two_pi / N);
  // Periodic images covering the Gaussian support.
  const int m_images = std::max(1, static_cast<int>(
      std::ceil((std::sqrt(2.0 * h * kTailExponentCutoff) + pi) / two_pi)));

  PhaseSpaceTable table;
  table.alpha_x = grids.alpha_x;
  table.alpha_xi = grids.alpha_xi;
  table.h = h;
  table.tag = TransformTag::geo;
  table.values.resize(n_xi, n_x);

  auto kernel_at = [&](double diff, double xi) {
    // sum over periodic images of e^{ i diff xi / h - diff^2/(2h) }
    Complex acc = 0.0;
    for (int m = -m_images; m <= m_images; ++m) {
      double d = diff - two_pi * m;
      double e = d * d / (2.0 * h);
      if (e > kTailExponentCutoff) continue;
      acc += std::polar(std::exp(-e), d * xi / h);
    }
    return acc;
  };

  const bool aligned = (n_x == N) && is_standard_periodic(grids.alpha_x);
  parallel_for(n_xi, [&](std::size_t row) {
    double xi = grids.alpha_xi[row];
    if (aligned) {
      // alpha_x and sample grids coincide: the kernel depends only on the
      // wrapped index difference, one table of N values per row.
      std::vector<Complex> kern(N);
      for (int l = 0; l < N; ++l) kern[l] = kernel_at(wrap_difference(two_pi * l / N), xi);
      for (int i = 0; i < n_x; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < N; ++j) acc += kern[(i - j + N) % N] * samples[j];
        table.values(row, i) = C * acc;
      }
    } else {
      for (int i = 0; i < n_x; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < N; ++j) {
          double diff = wrap_difference(grids.alpha_x[i] - two_pi * j / N);
          acc += kernel_at(diff, xi) * samples[j];
        }
        table.values(row, i) = C * acc;
      }
    }
  });
  return table;
}

PhaseSpaceTable fbi_hol_circle(const std::vector<Complex>& samples, double h,
                               const PhaseSpaceGrids& grids) {
  if (!(h > 0)) throw std::invalid_argument("fbi_hol_circle: h must be positive");
  const int N = static_cast<int>(samples.size());
  const int n_x = static_cast<int>(grids.alpha_x.size());
  const int n_xi = static_cast<int>(grids.alpha_xi.size());

  auto coeffs = fourier_coefficients(samples);
  const int m0 = coefficient_min_frequency(N);

  // Truncation bound: the highest available coefficients, weighted by the
  // theta-kernel Gaussian at the worst grid frequency, must be negligible.
  double cmax = 0;
  for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0) cmax = 1;
  double xi_lo = grids.alpha_xi.front(), xi_hi = grids.alpha_xi.back();
  double tail = 0;
  for (int k : {0, 1, N - 2, N - 1}) {
    if (k < 0 || k >= N) continue;
    double m = m0 + k;
    double dev = std::min(std::abs(m - xi_lo / h), std::abs(m - xi_hi / h));
    if ((m - xi_lo / h) * (m - xi_hi / h) < 0) dev = 0;  // window straddles m
    tail = std::max(tail, std::abs(coeffs[k]) / cmax * std::exp(-0.5 * h * dev * dev));
  }
  if (tail > 1e-12)
    throw std::invalid_argument(
        "fbi_hol_circle: truncation bound unmet, input spectrum reaches the coefficient "
        "boundary with non-negligible kernel weight");

  // values = (coefficient x Gaussian) matrix times plane-wave matrix.
  Eigen::MatrixXcd weighted(n_xi, N);
  for (int row = 0; row < n_xi; ++row) {
    double xi = grids.alpha_xi[row];
    for (int k = 0; k < N; ++k) {
      double m = m0 + k;
      double dev = m - xi / h;
      weighted(row, k) = coeffs[k] * std::exp(-0.5 * h * dev * dev);
    }
  }
  Eigen::MatrixXcd waves(N, n_x);
  for (int k = 0; k < N; ++k) {
    double m = m0 + k;
    for (int i = 0; i < n_x; ++i) waves(k, i) = std::polar(1.0, m * grids.alpha_x[i]);
  }

  PhaseSpaceTable table;
  table.alpha_x = grids.alpha_x;
  table.alpha_xi = grids.alpha_xi;
  table.h = h;
  table.tag = TransformTag::hol;
  table.values = std::pow(h, -0.25) * (weighted * waves);
  return table;
}

WeightSpec WeightSpec::thm2(double delta, int k_order) {
  if (!(delta > 0)) throw std::invalid_argument("WeightSpec::thm2: delta must be positive");
  WeightSpec w;
  w.family = Family::thm2;
  w.delta = delta;
  w.k_order = k_order;
  return w;
}

WeightSpec WeightSpec::thm3_gamma(double gamma, double band_eps) {
  if (!(gamma > 0 && gamma < 0.5))
    throw std::invalid_argument("WeightSpec::thm3_gamma: gamma must lie in (0, 1/2)");
  WeightSpec w;
  w.family = Family::thm3_gamma;
  w.gamma = gamma;
  w.band_eps = band_eps;
  return w;
}

WeightSpec WeightSpec::thm3_sharp(double band_eps) {
  WeightSpec w;
  w.family = Family::thm3_sharp;
  w.band_eps = band_eps;
  return w;
}

double WeightSpec::eval(double xi) const {
  switch (family) {
    case Family::thm2: {
      double p = symbol(xi);
      return delta * p * p / std::pow(1.0 + xi * xi, k_order);
    }
    case Family::thm3_gamma:
      if (!(gamma < 0.5))
        throw std::domain_error("WeightSpec: thm3_gamma requires gamma < 1/2");
      return gamma * (xi - 1.0) * (xi - 1.0) / 2.0;
    case Family::thm3_sharp:
    default:
      return (xi - 1.0) * (xi - 1.0) / 2.0;
  }
}

std::string WeightSpec::name() const {
  char buf[96];
  switch (family) {
    case Family::thm2:
      std::snprintf(buf, sizeof(buf), "thm2(delta=%g,k=%d)", delta, k_order);
      break;
    case Family::thm3_gamma:
      std::snprintf(buf, sizeof(buf), "thm3_gamma(gamma=%g)", gamma);
      break;
    default:
      std::snprintf(buf, sizeof(buf), "thm3_sharp");
      break;
  }
  return buf;
}

namespace {

std::vector<double> xi_trapezoid_weights(const std::vector<double>& xi) {
  int n = static_cast<int>(xi.size());
  std::vector<double> w(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    double dx = xi[i + 1] - xi[i];
    w[i] += 0.5 * dx;
    w[i + 1] += 0.5 * dx;
  }
  return w;
}

}  // namespace

double weighted_norm(const PhaseSpaceTable& table, const WeightSpec& spec, NormKind kind) {
  const int n_xi = table.n_xi();
  const int n_x = table.n_x();
  const double wx = two_pi / n_x;
  auto wxi = xi_trapezoid_weights(table.alpha_xi);

  std::vector<char> in_band(n_xi, 1);
  if (spec.band_eps > 0) {
    for (int i = 0; i < n_xi; ++i)
      in_band[i] = std::abs(WeightSpec::symbol(table.alpha_xi[i])) <= spec.band_eps;
  }

  // First pass: running maximum of log(e^{psi/h} |T|).
  double amax = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_xi; ++i) {
    if (!in_band[i]) continue;
    double psi_over_h = spec.eval(table.alpha_xi[i]) / table.h;
    for (int j = 0; j < n_x; ++j) {
      double mag = std::abs(table.values(i, j));
      if (mag == 0) continue;
      amax = std::max(amax, psi_over_h + std::log(mag));
    }
  }
  if (!std::isfinite(amax)) return 0.0;
  if (kind == NormKind::Linf) return std::exp(amax);

  double acc = 0;
  for (int i = 0; i < n_xi; ++i) {
    if (!in_band[i]) continue;
    double psi_over_h = spec.eval(table.alpha_xi[i]) / table.h;
    for (int j = 0; j < n_x; ++j) {
      double mag = std::abs(table.values(i, j));
      if (mag == 0) continue;
      double a = psi_over_h + std::log(mag) - amax;
      acc += wxi[i] * wx * std::exp(2.0 * a);
    }
  }
  return std::exp(amax) * std::sqrt(acc);
}

double table_l2_norm(const PhaseSpaceTable& table) {
  const double wx = two_pi / table.n_x();
  auto wxi = xi_trapezoid_weights(table.alpha_xi);
  double acc = 0;
  for (int i = 0; i < table.n_xi(); ++i)
    for (int j = 0; j < table.n_x(); ++j)
      acc += wxi[i] * wx * std::norm(table.values(i, j));
  return std::sqrt(acc);
}

double zero_section_mass(const PhaseSpaceTable& table, double eps) {
  if (eps >= 1.0) throw std::invalid_argument("zero_section_mass: eps must be < 1");
  if (eps <= 0) return 0.0;
  const double wx = two_pi / table.n_x();
  const auto& xi = table.alpha_xi;
  double acc = 0;
  // Clip each trapezoid cell to [-eps, eps] so the eps -> 0 limit vanishes.
  for (int i = 0; i + 1 < table.n_xi(); ++i) {
    double lo = std::max(xi[i], -eps), hi = std::min(xi[i + 1], eps);
    if (hi <= lo) continue;
    double cell = xi[i + 1] - xi[i];
    auto row_mass = [&](int row) {
      double m = 0;
      for (int j = 0; j < table.n_x(); ++j) m += std::norm(table.values(row, j));
      return m * wx;
    };
    double f0 = row_mass(i), f1 = row_mass(i + 1);
    // Linear interpolation of |T|^2 over the clipped part of the cell.
    double u0 = (lo - xi[i]) / cell, u1 = (hi - xi[i]) / cell;
    double g0 = f0 + (f1 - f0) * u0, g1 = f0 + (f1 - f0) * u1;
    acc += 0.5 * (g0 + g1) * (hi - lo);
  }
  return std::sqrt(acc);
}

PhaseSpaceTable fbi_of_computed_mode(const LayerOperators& ops, const SteklovMode& mode,
                                     const PhaseSpaceGrids& grids, TransformTag tag) {
  const int N = ops.n_per_component;
  int k_dom = dominant_wavenumber(ops, mode.trace);
  if (k_dom > resolved_wavenumber_limit(ops))
    throw std::domain_error("fbi_of_computed_mode: mode with dominant wavenumber " +
                            std::to_string(k_dom) + " is unresolved at N = " +
                            std::to_string(N));

  // Dominant component by arclength-weighted mass.
  int cbest = 0;
  double mbest = -1;
  for (int c = 0; c < ops.domain.component_count(); ++c) {
    double m = 0;
    for (int j = 0; j < N; ++j) {
      int idx = c * N + j;
      m += mode.trace(idx) * mode.trace(idx) * ops.nodes[idx].weight;
    }
    if (m > mbest) {
      mbest = m;
      cbest = c;
    }
  }
  const auto& curve = ops.domain.component(cbest);
  const double L = curve.length();

  // Spectral antiderivative of the speed gives the arclength function
  // s(t) = (L/2pi) t + periodic part.
  std::vector<Complex> speed(N);
  for (int j = 0; j < N; ++j) speed[j] = curve.speed(two_pi * j / N);
  auto sp = fourier_coefficients(speed);
  const int m0 = coefficient_min_frequency(N);
  double mean_speed = sp[-m0].real();  // coefficient m = 0
  auto arclength = [&](double t) {
    double s = mean_speed * t;
    for (int k = 0; k < N; ++k) {
      int m = m0 + k;
      if (m == 0) continue;
      Complex im(0.0, static_cast<double>(m));
      s += (sp[k] * (std::polar(1.0, m * t) - 1.0) / im).real();
    }
    return s;
  };

  std::vector<Complex> trace(N);
  for (int j = 0; j < N; ++j) trace[j] = mode.trace(cbest * N + j);
  auto trace_coeffs = fourier_coefficients(trace);

  // Resample the trace at uniform arclength; Newton on s(t) = target.
  std::vector<Complex> resampled(N);
  for (int j = 0; j < N; ++j) {
    double target = L * j / N;
    double t = target / mean_speed;
    for (int it = 0; it < 50; ++it) {
      double step = (arclength(t) - target) / curve.speed(t);
      t -= step;
      if (std::abs(step) < 1e-13) break;
    }
    resampled[j] = evaluate_fourier_series(trace_coeffs, t);
  }

  // Unit L^2(dy) normalization on the reparametrized circle.
  double nrm = 0;
  for (const auto& v : resampled) nrm += std::norm(v);
  nrm = std::sqrt(nrm * two_pi / N);
  for (auto& v : resampled) v /= nrm;

  double h_hat = two_pi * mode.h() / L;
  return tag == TransformTag::hol ? fbi_hol_circle(resampled, h_hat, grids)
                                  : fbi_geo_circle(resampled, h_hat, grids);
}

}  // namespace steklov::fbi
