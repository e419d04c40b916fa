#pragma once

#include <Eigen/Dense>

#include <vector>

#include "steklov/dtn.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

/// Interior evaluation of a Steklov eigenfunction from its boundary trace via
/// the Green-identity representation
///   u(z) = sigma * int G(z,.) phi ds  -  int N(z,.) phi ds,
/// computed by trapezoid quadrature on an FFT-upsampled trace. Reliable down
/// to the distance d_min = 6 L / (upsample * N) from each component.
class ExtensionField {
 public:
  ExtensionField(const Domain& domain, const SteklovMode& mode, int upsample = 8);
  /// Synthetic-trace constructor (complex nodal values on the N-per-component
  /// grid), for closed-form modes and tests.
  ExtensionField(const Domain& domain, const Eigen::VectorXcd& trace, double sigma,
                 int upsample = 8);

  double sigma() const { return sigma_; }
  double d_min() const { return d_min_; }
  int upsample() const { return upsample_; }
  const Domain& domain() const { return domain_; }

  /// Value at one strictly interior point. Throws if the point violates the
  /// reliable band (closer than d_min to some component).
  Complex evaluate(const Vec2& z) const;

  /// Batch evaluation; validates every point first and reports offenders.
  std::vector<Complex> evaluate(const std::vector<Vec2>& points) const;

  /// The two terms of the representation separately: sigma * I_G and I_N with
  /// u = sigma * I_G - I_N (split diagnostics).
  struct SplitValue {
    Complex single_layer;  ///< int G(z,.) phi ds
    Complex double_layer;  ///< int N(z,.) phi ds
  };
  SplitValue evaluate_split(const Vec2& z) const;

  /// Max |trace| over the upsampled boundary grid.
  double boundary_max_abs() const;

 private:
  void build(const Eigen::VectorXcd& trace);
  void check_distance(const Vec2& z) const;

  Domain domain_;
  double sigma_ = 0;
  int upsample_ = 8;
  int n_coarse_ = 0;
  double d_min_ = 0;
  // Fine-grid geometry and upsampled trace, per component, concatenated.
  struct FinePoint {
    Vec2 position;
    Vec2 outward_normal;
    double weight;  ///< (2 pi / M) |q'|
  };
  std::vector<FinePoint> fine_;
  std::vector<Complex> trace_fine_;
};

/// Maximum-principle check: max interior |u| over the grid against the
/// boundary trace maximum.
struct MaxPrincipleReport {
  double max_interior = 0;
  double max_boundary = 0;
  double ratio = 0;
  bool pass = false;
};

MaxPrincipleReport max_principle_check(const ExtensionField& field,
                                       const std::vector<Vec2>& grid,
                                       double tolerance = 1e-6);

/// Regular grid of interior points of the domain with distance >= d_keep
/// from the boundary (for max-principle and harmonicity scans).
std::vector<Vec2> interior_grid(const Domain& domain, int per_side, double d_keep);

}  // namespace steklov
