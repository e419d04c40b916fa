#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "steklov/util.hpp"

namespace steklov::reference {

/// One entry of a closed-form Steklov spectrum.
struct ReferenceSpectrumEntry {
  int k = 0;            ///< angular (or cross-section) index
  double sigma = 0;     ///< eigenvalue, units 1/length
  int multiplicity = 1; ///< 1 or 2
  std::string family;   ///< disk | cylinder-even | cylinder-odd | annulus-branch-1 | annulus-branch-2
};

/// Disk of radius R: sigma_k = k/R, k = 0, 1, 2, ...
double disk_sigma(double R, int k);

/// Boundary-normalized disk eigenfunction (2 pi R)^{-1/2} (r/R)^k e^{i k theta}.
Complex disk_mode(double R, int k, double r, double theta);

/// Steklov eigenvalues of the annulus r0 < |z| < 1 for angular index k.
struct AnnulusEigenvalues {
  double sigma1 = 0;           ///< smaller root, sigma ~ k
  double sigma2 = 0;           ///< larger root, sigma ~ k/r0
  bool from_quadratic = true;  ///< false on the k = 0 branch (radial modes)
};

/// Roots of p_k(sigma) = sigma^2 - sigma k ((1+r0)/r0)((1+r0^{2k})/(1-r0^{2k}))
/// + k^2/r0 for k >= 1, sorted ascending. For k = 0 the quadratic degenerates;
/// the radial modes u = a + b log r give sigma = 0 and
/// sigma = -(1 + 1/r0)/log r0, flagged via from_quadratic = false.
AnnulusEigenvalues annulus_eigenvalues(double r0, int k);

/// Evaluate p_k at sigma (root residual diagnostic).
double annulus_characteristic(double r0, int k, double sigma);

/// Annulus eigenfunction C e^{i k theta} (r^k + beta r^{-k}) with
/// beta = (k - sigma)/(k + sigma) and C fixed by unit L^2 norm of the trace
/// over both boundary circles. The k = 0 branch uses u = C (1 + sigma log r).
/// Throws when sigma = -k (pole of beta).
Complex annulus_mode(double r0, int k, double sigma, double r, double theta);

/// Cylinder (-1,1) x S^1: even/odd branch eigenvalues for cross-section
/// frequency lambda (lambda tanh lambda, lambda coth lambda); the odd branch
/// takes its limit value 1 at lambda = 0.
struct CylinderEigenvalues {
  double even = 0;
  double odd = 0;
};
CylinderEigenvalues cylinder_sigmas(double lambda);

/// Cylinder eigenfunction with unit-circle cross section (lambda_k = k),
/// L^2-normalized over both boundary circles. parity_even selects
/// cosh(k t)/cosh k, otherwise sinh(k t)/sinh k; taxial in [-1, 1].
Complex cylinder_mode(int k, bool parity_even, double taxial, double x);

/// Lowest entries of each closed-form spectrum, sorted by sigma.
std::vector<ReferenceSpectrumEntry> disk_spectrum(double R, int count);
std::vector<ReferenceSpectrumEntry> annulus_spectrum(double r0, int k_max);
std::vector<ReferenceSpectrumEntry> cylinder_spectrum(int k_max);

/// Exact decay-rate function d_exact(d) of a worked example, together with
/// its power-series coefficients at the boundary:
///   disk(R):          -R log(1 - d/R)      = d + d^2/(2R) + ...
///   annulus inner r0:  r0 log(1 + d/r0)    = d - d^2/(2 r0) + ...
///   annulus outer:     -log(1 - d)         (unit outer circle)
///   cylinder:          d
struct ExactDecayLaw {
  std::function<double(double)> d_exact;
  double linear = 1;
  double quadratic = 0;
};

ExactDecayLaw decay_law_disk(double R);
ExactDecayLaw decay_law_annulus_inner(double r0);
ExactDecayLaw decay_law_annulus_outer();
ExactDecayLaw decay_law_cylinder();

}  // namespace steklov::reference
