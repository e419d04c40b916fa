#include "steklov/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steklov::reference {

namespace {

double annulus_normalization(double r0, int k, double sigma) {
  // Unit L^2 norm of the trace over both circles |z| = 1 and |z| = r0.
  // For k >= 1 the radial profile is g(r) = r^k + beta r^{-k};
  // ||trace||^2 = 2 pi [ g(1)^2 + r0 g(r0)^2 ].
  if (k == 0) {
    double g1 = 1.0;                      // 1 + sigma log 1
    double g0 = 1.0 + sigma * std::log(r0);
    return 1.0 / std::sqrt(two_pi * (g1 * g1 + r0 * g0 * g0));
  }
  double beta = (k - sigma) / (k + sigma);
  double g1 = 1.0 + beta;
  double g0 = std::pow(r0, k) + beta * std::pow(r0, -k);
  return 1.0 / std::sqrt(two_pi * (g1 * g1 + r0 * g0 * g0));
}

}  // namespace

double disk_sigma(double R, int k) {
  if (R <= 0) throw std::invalid_argument("disk_sigma: R must be positive");
  if (k < 0) throw std::invalid_argument("disk_sigma: k must be nonnegative");
  return static_cast<double>(k) / R;
}

Complex disk_mode(double R, int k, double r, double theta) {
  double amp = std::pow(r / R, k) / std::sqrt(two_pi * R);
  return amp * std::polar(1.0, k * theta);
}

AnnulusEigenvalues annulus_eigenvalues(double r0, int k) {
  if (!(0 < r0 && r0 < 1)) throw std::invalid_argument("annulus_eigenvalues: need 0 < r0 < 1");
  if (k < 0) throw std::invalid_argument("annulus_eigenvalues: k must be nonnegative");
  AnnulusEigenvalues out;
  if (k == 0) {
    out.sigma1 = 0.0;
    out.sigma2 = -(1.0 + 1.0 / r0) / std::log(r0);
    out.from_quadratic = false;
    return out;
  }
  double kk = static_cast<double>(k);
  double q = std::pow(r0, 2 * k);
  double b = kk * ((1.0 + r0) / r0) * ((1.0 + q) / (1.0 - q));
  double c = kk * kk / r0;
  double disc = std::sqrt(b * b - 4.0 * c);
  out.sigma1 = (b - disc) / 2.0;
  out.sigma2 = (b + disc) / 2.0;
  return out;
}

double annulus_characteristic(double r0, int k, double sigma) {
  double kk = static_cast<double>(k);
  double q = std::pow(r0, 2 * k);
  double b = kk * ((1.0 + r0) / r0) * ((1.0 + q) / (1.0 - q));
  return sigma * sigma - sigma * b + kk * kk / r0;
}

Complex annulus_mode(double r0, int k, double sigma, double r, double theta) {
  double C = annulus_normalization(r0, k, sigma);
  if (k == 0) return C * (1.0 + sigma * std::log(r));
  if (std::abs(static_cast<double>(k) + sigma) < 1e-14)
    throw std::domain_error("annulus_mode: sigma = -k pole in the radial coefficient");
  double beta = (k - sigma) / (k + sigma);
  double radial = std::pow(r, k) + beta * std::pow(r, -k);
  return C * radial * std::polar(1.0, k * theta);
}

CylinderEigenvalues cylinder_sigmas(double lambda) {
  if (lambda < 0) throw std::invalid_argument("cylinder_sigmas: lambda must be nonnegative");
  CylinderEigenvalues out;
  if (lambda == 0) {
    out.even = 0.0;
    out.odd = 1.0;  // limit of lambda coth lambda
    return out;
  }
  out.even = lambda * std::tanh(lambda);
  out.odd = lambda / std::tanh(lambda);
  return out;
}

Complex cylinder_mode(int k, bool parity_even, double taxial, double x) {
  double lambda = static_cast<double>(k);
  double profile;
  if (parity_even) {
    profile = k == 0 ? 1.0 : std::cosh(lambda * taxial) / std::cosh(lambda);
  } else {
    profile = k == 0 ? taxial : std::sinh(lambda * taxial) / std::sinh(lambda);
  }
  // Trace values are (2 pi)^{-1/2} e^{ikx} on each of the two boundary
  // circles; the extra 2^{-1/2} normalizes over both.
  double C = 1.0 / std::sqrt(2.0 * two_pi);
  return C * profile * std::polar(1.0, k * x);
}

std::vector<ReferenceSpectrumEntry> disk_spectrum(double R, int count) {
  std::vector<ReferenceSpectrumEntry> out;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    ReferenceSpectrumEntry e;
    e.k = k;
    e.sigma = disk_sigma(R, k);
    e.multiplicity = k == 0 ? 1 : 2;
    e.family = "disk";
    out.push_back(e);
  }
  return out;
}

std::vector<ReferenceSpectrumEntry> annulus_spectrum(double r0, int k_max) {
  std::vector<ReferenceSpectrumEntry> out;
  for (int k = 0; k <= k_max; ++k) {
    auto eigs = annulus_eigenvalues(r0, k);
    ReferenceSpectrumEntry e1;
    e1.k = k;
    e1.sigma = eigs.sigma1;
    e1.multiplicity = k == 0 ? 1 : 2;
    e1.family = "annulus-branch-1";
    out.push_back(e1);
    ReferenceSpectrumEntry e2;
    e2.k = k;
    e2.sigma = eigs.sigma2;
    e2.multiplicity = k == 0 ? 1 : 2;
    e2.family = "annulus-branch-2";
    out.push_back(e2);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  return out;
}

std::vector<ReferenceSpectrumEntry> cylinder_spectrum(int k_max) {
  std::vector<ReferenceSpectrumEntry> out;
  for (int k = 0; k <= k_max; ++k) {
    auto s = cylinder_sigmas(static_cast<double>(k));
    ReferenceSpectrumEntry even{k, s.even, k == 0 ? 1 : 2, "cylinder-even"};
    ReferenceSpectrumEntry odd{k, s.odd, k == 0 ? 1 : 2, "cylinder-odd"};
    out.push_back(even);
    out.push_back(odd);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  return out;
}

ExactDecayLaw decay_law_disk(double R) {
  ExactDecayLaw law;
  law.d_exact = [R](double d) { return -R * std::log(1.0 - d / R); };
  law.linear = 1.0;
  law.quadratic = 1.0 / (2.0 * R);
  return law;
}

ExactDecayLaw decay_law_annulus_inner(double r0) {
  // The series expansion d - d^2/(2 r0) + ... fixes the positive-log form
  // r0 log(1 + d/r0); the decay rate grows with distance from the inner
  // circle while the quadratic correction is negative.
  ExactDecayLaw law;
  law.d_exact = [r0](double d) { return r0 * std::log(1.0 + d / r0); };
  law.linear = 1.0;
  law.quadratic = -1.0 / (2.0 * r0);
  return law;
}

ExactDecayLaw decay_law_annulus_outer() { return decay_law_disk(1.0); }

ExactDecayLaw decay_law_cylinder() {
  ExactDecayLaw law;
  law.d_exact = [](double d) { return d; };
  law.linear = 1.0;
  law.quadratic = 0.0;
  return law;
}

}  // namespace steklov::reference
