#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

#include "steklov/extension.hpp"
#include "steklov/geometry.hpp"

namespace steklov::decay {

/// |u| evaluated at the Fermi point (boundary parameter t, inward distance d).
using RayField = std::function<double(double t, double d)>;

/// Samples of f(t_i) = -h log sup_window |u| along one inward normal ray,
/// with fitted polynomial coefficients once fit_decay has run.
struct DecayProfile {
  int component = 0;
  double t_foot = 0;
  double h = 0;
  std::vector<double> dist;     ///< sample distances t_i
  std::vector<double> f;        ///< -h log sup_window |u|
  std::vector<bool> dropped;    ///< underflow-dropped samples

  bool fitted = false;
  Eigen::VectorXd coeffs;       ///< polynomial coefficients, constant first
  double residual = 0;          ///< rms misfit over the fitted window

  double a0() const { return coeffs.size() > 0 ? coeffs(0) : 0; }
  double a1() const { return coeffs.size() > 1 ? coeffs(1) : 0; }
  double a2() const { return coeffs.size() > 2 ? coeffs(2) : 0; }
};

/// Angular sup-envelope sampler: at each distance the tangential oscillation
/// of |u| is removed by taking the sup over a boundary-parameter window of
/// the given halfwidth around t_foot. Samples with |u| < 1e-300 are dropped
/// and flagged. window_halfwidth = 0 disables the envelope.
DecayProfile sample_normal_ray(const RayField& absu, double h, int component, double t_foot,
                               const std::vector<double>& distances, double window_halfwidth,
                               int window_samples = 25);

/// RayField from a computed extension: |u| at fermi(component, t, d).
RayField ray_field_from_extension(const ExtensionField& field, int component);

/// Window halfwidth (in boundary parameter) covering ~1.2 half-wavelengths of
/// the mode's tangential oscillation at the given foot: 1.2 pi h / |q'(t)|.
double default_window_halfwidth(const Domain& domain, int component, double t_foot, double h);

/// Least-squares polynomial fit of f over dist in [t_range_lo, t_range_hi].
/// The model degree defaults to 5 so the reported leading coefficients
/// (a0, a1, a2) approximate the Taylor coefficients of the rate function at
/// the boundary rather than window-centered averages. The fit is refused
/// (fitted = false, no coefficients) when the rms residual exceeds
/// residual_threshold. Throws on a rank-deficient design or fewer than 8
/// usable samples.
DecayProfile fit_decay(const DecayProfile& profile, double t_range_lo = 0.02,
                       double t_range_hi = 0.2, int degree = 5,
                       double residual_threshold = 0.02);

/// Theorem constants from boundary curvature: the global constant
/// C = -3/2 + (1/2) inf Q, the per-foot constant a(x') = -3/2 + (1/2) Q(x'),
/// and the sharp quadratic coefficient (1/2) inf Q.
struct PredictedConstants {
  double C = 0;
  double inf_Q = 0;
  double sharp_quadratic = 0;
  std::function<double(int component, double t)> a_of;  ///< a_{Omega,g}(x')
};

PredictedConstants predicted_constants(const Domain& domain);
/// Flat cylinder boundary: Q = 0, C = -3/2, sharp quadratic 0.
PredictedConstants predicted_constants_cylinder();

/// Per-profile outcome of the decay-rate verification.
struct ProfileVerdict {
  int component = 0;
  double t_foot = 0;
  double a1 = 0;
  double a2 = 0;
  double a2_global_bound = 0;   ///< C - delta
  double a2_local_bound = 0;    ///< a(x') - delta
  double margin_global = 0;     ///< a2 - (C - delta)
  double margin_local = 0;      ///< a2 - (a(x') - delta)
  bool pass_a1 = false;
  bool pass_global = false;
  bool pass_local = false;
};

struct Theorem1Report {
  std::vector<ProfileVerdict> profiles;
  bool all_pass = false;
  std::string failure_summary;
};

/// Checks, for each fitted profile: (i) a1 = 1 within a1_tol, (ii) the global
/// quadratic lower bound a2 >= C - delta, (iii) the per-foot refinement
/// a2 >= a(x') - delta.
Theorem1Report verify_theorem1(const PredictedConstants& preds,
                               const std::vector<DecayProfile>& profiles,
                               double delta = 0.05, double a1_tol = 0.01);

}  // namespace steklov::decay
