#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "steklov/dtn.hpp"
#include "steklov/util.hpp"

namespace steklov::fbi {

/// Phase-space evaluation grids: alpha_x in [0, 2pi) (uniform, periodic) and
/// alpha_xi on a closed interval (uniform).
struct PhaseSpaceGrids {
  std::vector<double> alpha_x;
  std::vector<double> alpha_xi;

  static PhaseSpaceGrids make(int n_x, double xi_min, double xi_max, int n_xi);
  /// Defaults resolving Gaussians of width sqrt(h) down to h = 1/40:
  /// n_x = 256, alpha_xi in [-3, 3] with 601 points.
  static PhaseSpaceGrids defaults(int n_x = 256);
};

enum class TransformTag { geo, hol };

/// Sampled FBI transform on the phase-space grid; values(i, j) holds
/// T u(alpha_x[j], alpha_xi[i]).
struct PhaseSpaceTable {
  std::vector<double> alpha_x;
  std::vector<double> alpha_xi;
  Eigen::MatrixXcd values;
  double h = 0;
  TransformTag tag = TransformTag::geo;

  int n_x() const { return static_cast<int>(alpha_x.size()); }
  int n_xi() const { return static_cast<int>(alpha_xi.size()); }
};

/// Gaussian FBI transform of a 2pi-periodic function, periodized over
/// R/2piZ and evaluated by trapezoid quadrature in position space:
///   T u(a) = 2^{-1/2} (pi h)^{-3/4} sum_m int e^{ i (a_x - y - 2pi m) a_xi / h
///            - (a_x - y - 2pi m)^2 / (2h) } u(y) dy.
/// The phase sign is fixed so that u = e^{iy/h} concentrates at a_xi = +1,
/// matching the holomorphic transform's closed form on the circle. Throws
/// when h is so large that neighboring periodic images of the Gaussian
/// window overlap beyond tolerance.
PhaseSpaceTable fbi_geo_circle(const std::vector<Complex>& samples, double h,
                               const PhaseSpaceGrids& grids);

/// Heat-kernel (holomorphic) FBI transform on the circle, evaluated through
/// exact Fourier coefficients of the input:
///   T_hol u(a) = h^{-1/4} sum_m u_hat(m) e^{-(h/2)(m - a_xi/h)^2} e^{i m a_x},
/// which is e^{-rho/h} (rho = a_xi^2/2) times the analytically continued heat
/// kernel at time h/2 paired with u. Throws when the available coefficient
/// range cannot support the requested frequency window (truncation bound).
PhaseSpaceTable fbi_hol_circle(const std::vector<Complex>& samples, double h,
                               const PhaseSpaceGrids& grids);

/// Weight family for exponentially weighted norms. The symbol of the model
/// operator is p(xi) = |xi| - 1 (DtN after arclength normalization).
struct WeightSpec {
  enum class Family { thm2, thm3_gamma, thm3_sharp };
  Family family = Family::thm2;
  double delta = 0;    ///< thm2 strength
  double gamma = 0;    ///< thm3_gamma strength, must be < 1/2
  int k_order = 1;     ///< operator order in the <xi>^{2k} denominator
  double band_eps = 0; ///< restrict norms to |p| <= band_eps when positive

  static WeightSpec thm2(double delta, int k_order = 1);
  static WeightSpec thm3_gamma(double gamma, double band_eps = 0.3);
  static WeightSpec thm3_sharp(double band_eps = 0.3);

  static double symbol(double xi) { return std::abs(xi) - 1.0; }

  /// psi(xi): thm2 -> delta p^2 / (1 + xi^2)^k, thm3_gamma -> gamma (xi-1)^2/2,
  /// thm3_sharp -> (xi-1)^2/2. Throws for thm3_gamma with gamma >= 1/2.
  double eval(double xi) const;

  std::string name() const;
};

enum class NormKind { L2, Linf };

/// || e^{psi/h} T u || over the table, restricted to {|p| <= band_eps} when
/// the spec requests a band. Exponentials are assembled in log space with
/// running-max shifting; no overflow is permitted.
double weighted_norm(const PhaseSpaceTable& table, const WeightSpec& spec, NormKind kind);

/// Plain (unweighted) L^2 norm of the table.
double table_l2_norm(const PhaseSpaceTable& table);

/// L^2 norm of the table restricted to |alpha_xi| <= eps, with quadrature
/// cells clipped to the interval so the eps -> 0 limit is exactly zero.
double zero_section_mass(const PhaseSpaceTable& table, double eps);

/// FBI transform of a computed mode: the trace on the dominant component is
/// reparametrized to uniform arclength on a circle of circumference L and the
/// circle transform is run with the rescaled parameter h_hat = 2 pi h / L, so
/// the frequency axis is dual to arclength and the characteristic set sits at
/// |xi'| = 1. Throws for unresolved modes (dominant wavenumber > N/4).
PhaseSpaceTable fbi_of_computed_mode(const LayerOperators& ops, const SteklovMode& mode,
                                     const PhaseSpaceGrids& grids,
                                     TransformTag tag = TransformTag::hol);

}  // namespace steklov::fbi
