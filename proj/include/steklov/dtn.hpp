#pragma once

#include <Eigen/Dense>

#include <vector>

#include "steklov/geometry.hpp"

namespace steklov {

/// One Nystrom node: equispaced parameter grids, N nodes per component.
struct NystromNode {
  int component = 0;
  double t = 0;
  Vec2 position = Vec2::Zero();
  Vec2 outward_normal = Vec2::Zero();
  double speed = 0;   ///< |q'(t)|
  double weight = 0;  ///< arclength trapezoid weight (2 pi / N) |q'(t)|
};

/// Dense single- and double-layer operators on the Nystrom grid.
///
/// Kernel conventions: G(z,z') = -(1/2pi) log|z-z'| (so the single layer has
/// Fourier eigenvalues R/(2|k|) on a circle of radius R) and
/// N(z,z') = d/dnu(z') G(z,z') with nu the outward normal, so that the
/// boundary principal-value operator K satisfies K 1 = -1/2.
///
/// The single layer uses the Martensen-Kussmaul/Kress periodic log-split
/// rule on same-component blocks; the cross-component blocks and the double
/// layer are smooth and use plain trapezoid weights, with the curvature
/// diagonal limit -kappa/(4 pi) on the double layer.
///
/// Internally the domain is rescaled to bounding-box diameter 1/2 before
/// assembly so that the logarithmic capacity stays below one and the
/// symmetrized single layer is positive definite; eigenvalues are scaled
/// back on return.
struct LayerOperators {
  Domain domain;
  int n_per_component = 0;
  std::vector<NystromNode> nodes;

  Eigen::MatrixXd S;  ///< single layer, nodal values -> nodal values, original scale
  Eigen::MatrixXd K;  ///< double layer (PV), nodal values -> nodal values

  // Solver internals (weight-symmetrized, rescaled geometry).
  double scale = 1.0;                 ///< rescale factor applied before assembly
  Eigen::MatrixXd S_sym_scaled;       ///< W^{1/2} S_scaled W^{-1/2}, symmetric
  Eigen::MatrixXd A_sym;              ///< W^{1/2} (K + I/2) W^{-1/2} (scale invariant)
  Eigen::LLT<Eigen::MatrixXd> S_llt;  ///< Cholesky of S_sym_scaled (when SPD)
  bool S_spd = false;
  double condition_estimate = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  Eigen::VectorXd arclength_weights() const;
};

LayerOperators assemble_layers(const Domain& domain, int N);

/// Computed Steklov eigenpair: eigenvalue and L^2(boundary)-normalized trace
/// on the Nystrom grid.
struct SteklovMode {
  double sigma = 0;
  Eigen::VectorXd trace;
  double residual = 0;  ///< generalized-eigenproblem residual, scaled space

  /// Semiclassical parameter 1/sigma; throws for the sigma = 0 mode.
  double h() const;
};

/// Lowest n_modes eigenpairs of (K + I/2) phi = sigma S phi, real and
/// nonnegative, sorted ascending, traces arclength-orthonormalized. Solves
/// the Cholesky-reduced symmetric problem when the rescaled single layer is
/// positive definite and falls back to dense QZ otherwise.
std::vector<SteklovMode> steklov_solve(const LayerOperators& ops, int n_modes);

/// Apply the discrete Dirichlet-to-Neumann map to nodal boundary data.
Eigen::VectorXd dtn_apply(const LayerOperators& ops, const Eigen::VectorXd& f);
Eigen::VectorXcd dtn_apply(const LayerOperators& ops, const Eigen::VectorXcd& f);

/// Discrete L^2(boundary) inner product with arclength weights.
double boundary_inner(const LayerOperators& ops, const Eigen::VectorXd& f,
                      const Eigen::VectorXd& g);

/// Dominant Fourier wavenumber of a trace on its dominant component.
int dominant_wavenumber(const LayerOperators& ops, const Eigen::VectorXd& trace);

/// Largest wavenumber considered resolved on this grid (N/4).
inline int resolved_wavenumber_limit(const LayerOperators& ops) {
  return ops.n_per_component / 4;
}

}  // namespace steklov
