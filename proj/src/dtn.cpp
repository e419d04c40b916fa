#include "steklov/dtn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steklov/fft.hpp"

namespace steklov {

namespace {

constexpr double pi = std::numbers::pi;

// Kress weights R_l for the periodic log-singular rule with N = 2n nodes:
//   int_0^{2pi} ln(4 sin^2((t_i - s)/2)) f(s) ds ~ sum_j R_{|i-j|} f(t_j).
std::vector<double> kress_weights(int N) {
  int n = N / 2;
  std::vector<double> R(N);
  for (int l = 0; l < N; ++l) {
    double acc = 0;
    for (int m = 1; m < n; ++m) acc += std::cos(m * l * pi / n) / m;
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    R[l] = -(two_pi / n) * acc - (pi / (n * n)) * sign;
  }
  return R;
}

struct AssemblyGeometry {
  std::vector<NystromNode> nodes;
  int N = 0;
};

AssemblyGeometry build_nodes(const Domain& domain, int N) {
  AssemblyGeometry g;
  g.N = N;
  for (int c = 0; c < domain.component_count(); ++c) {
    const auto& curve = domain.component(c);
    for (int j = 0; j < N; ++j) {
      NystromNode node;
      node.component = c;
      node.t = two_pi * j / N;
      node.position = curve.position(node.t);
      node.outward_normal = curve.outward_normal(node.t);
      node.speed = curve.speed(node.t);
      node.weight = (two_pi / N) * node.speed;
      g.nodes.push_back(node);
    }
  }
  return g;
}

// Single layer at geometric scale s, nodal values -> nodal values.
Eigen::MatrixXd assemble_single_layer(const Domain& domain, const AssemblyGeometry& g,
                                      double s) {
  const int total = static_cast<int>(g.nodes.size());
  const int N = g.N;
  auto R = kress_weights(N);
  Eigen::MatrixXd S(total, total);
  for (int i = 0; i < total; ++i) {
    const auto& ni = g.nodes[i];
    for (int j = 0; j < total; ++j) {
      const auto& nj = g.nodes[j];
      double sw = s * nj.speed;
      if (ni.component == nj.component) {
        int l = std::abs((i % N) - (j % N));
        double smooth;
        if (i == j) {
          smooth = -std::log(s * ni.speed) / two_pi;
        } else {
          double dsin = 2.0 * std::sin(0.5 * (ni.t - nj.t));
          double r2 = (s * s) * (ni.position - nj.position).squaredNorm();
          smooth = -std::log(r2 / (dsin * dsin)) / (2.0 * two_pi);
        }
        S(i, j) = (-R[l] / (2.0 * two_pi) + (two_pi / N) * smooth) * sw;
      } else {
        double r = s * (ni.position - nj.position).norm();
        S(i, j) = -(std::log(r) / two_pi) * (two_pi / N) * sw;
      }
    }
  }
  return S;
}

// Double layer (scale invariant), nodal values -> nodal values.
Eigen::MatrixXd assemble_double_layer(const Domain& domain, const AssemblyGeometry& g) {
  const int total = static_cast<int>(g.nodes.size());
  const int N = g.N;
  Eigen::MatrixXd K(total, total);
  for (int i = 0; i < total; ++i) {
    const auto& ni = g.nodes[i];
    for (int j = 0; j < total; ++j) {
      const auto& nj = g.nodes[j];
      double kernel;
      if (i == j) {
        kernel = -domain.component(ni.component).signed_curvature(ni.t) / (2.0 * two_pi);
      } else {
        Vec2 d = nj.position - ni.position;
        kernel = -nj.outward_normal.dot(d) / (two_pi * d.squaredNorm());
      }
      K(i, j) = kernel * (two_pi / N) * nj.speed;
    }
  }
  return K;
}

}  // namespace

Eigen::VectorXd LayerOperators::arclength_weights() const {
  Eigen::VectorXd w(size());
  for (int i = 0; i < size(); ++i) w(i) = nodes[i].weight;
  return w;
}

LayerOperators assemble_layers(const Domain& domain, int N) {
  if (N < 32 || N % 2 != 0)
    throw std::invalid_argument("assemble_layers: N must be even and >= 32");

  LayerOperators ops{domain};
  ops.n_per_component = N;
  auto g = build_nodes(domain, N);
  ops.nodes = g.nodes;

  // Components must be disjoint: nodes of different components may not
  // coincide, or the smooth cross-component kernels blow up.
  double min_cross = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
      if (g.nodes[i].component != g.nodes[j].component)
        min_cross = std::min(min_cross, (g.nodes[i].position - g.nodes[j].position).norm());
  if (domain.component_count() > 1 && min_cross < 1e-10 * domain.bbox_diameter())
    throw std::invalid_argument("assemble_layers: boundary components touch or intersect");

  ops.S = assemble_single_layer(domain, g, 1.0);
  ops.K = assemble_double_layer(domain, g);

  // Rescale so the logarithmic capacity (at most half the diameter) is
  // well below one, making the symmetrized single layer positive definite.
  ops.scale = 0.5 / domain.bbox_diameter();
  Eigen::MatrixXd S_scaled = assemble_single_layer(domain, g, ops.scale);

  const int total = ops.size();
  Eigen::VectorXd w = ops.arclength_weights();
  Eigen::VectorXd sqw = w.cwiseSqrt();
  Eigen::MatrixXd Ssym(total, total), Asym(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      Ssym(i, j) = sqw(i) * S_scaled(i, j) / sqw(j);
      Asym(i, j) = sqw(i) * ops.K(i, j) / sqw(j);
    }
  // The scaled-weight factors sqrt(s)/sqrt(s) cancel, so original weights
  // suffice above. Symmetrize away quadrature-level asymmetry in S.
  Ssym = 0.5 * (Ssym + Ssym.transpose()).eval();
  Asym.diagonal().array() += 0.5;

  ops.S_sym_scaled = Ssym;
  ops.A_sym = Asym;
  ops.S_llt.compute(Ssym);
  ops.S_spd = ops.S_llt.info() == Eigen::Success;
  if (ops.S_spd) {
    Eigen::VectorXd d = ops.S_llt.matrixL().toDenseMatrix().diagonal();
    double dmax = d.maxCoeff(), dmin = d.minCoeff();
    ops.condition_estimate = (dmax * dmax) / (dmin * dmin);
  } else {
    ops.condition_estimate = std::numeric_limits<double>::infinity();
  }
  return ops;
}

double SteklovMode::h() const {
  if (sigma <= 0) throw std::domain_error("SteklovMode::h: undefined for sigma <= 0");
  return 1.0 / sigma;
}

std::vector<SteklovMode> steklov_solve(const LayerOperators& ops, int n_modes) {
  const int total = ops.size();
  if (n_modes > ops.n_per_component / 2)
    throw std::invalid_argument("steklov_solve: n_modes exceeds the resolved range N/2");
  if (n_modes < 1) throw std::invalid_argument("steklov_solve: n_modes must be positive");

  Eigen::VectorXd w = ops.arclength_weights();
  Eigen::VectorXd sqw = w.cwiseSqrt();

  Eigen::VectorXd evals;
  Eigen::MatrixXd evecs;

  if (ops.S_spd) {
    // D = S^{-1} (K + I/2) in the weight-symmetrized representation is the
    // discrete DtN map; its asymmetry is pure quadrature error, so the
    // symmetric part is eigensolved directly.
    Eigen::MatrixXd D = ops.S_llt.solve(ops.A_sym);
    Eigen::MatrixXd Dsym = 0.5 * (D + D.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Dsym);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("steklov_solve: symmetric eigensolver failed");
    evals = es.eigenvalues();
    evecs = es.eigenvectors();
  } else {
    // Indefinite mass matrix: dense QZ on the pencil (A, S).
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
    ges.compute(ops.A_sym, ops.S_sym_scaled, /*computeEigenvectors=*/true);
    if (ges.info() != Eigen::Success)
      throw std::runtime_error("steklov_solve: QZ eigensolver failed");
    auto alphas = ges.alphas();
    auto betas = ges.betas();
    std::vector<std::pair<double, int>> order;
    for (int i = 0; i < total; ++i) {
      if (std::abs(betas(i)) < 1e-14) continue;
      Complex lam = alphas(i) / betas(i);
      if (std::abs(lam.imag()) > 1e-6 * (1.0 + std::abs(lam.real()))) continue;
      order.emplace_back(lam.real(), i);
    }
    std::sort(order.begin(), order.end());
    evals.resize(static_cast<int>(order.size()));
    evecs.resize(total, static_cast<int>(order.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      evals(static_cast<int>(k)) = order[k].first;
      evecs.col(static_cast<int>(k)) = ges.eigenvectors().col(order[k].second).real();
    }
  }

  if (evals.size() < n_modes)
    throw std::runtime_error("steklov_solve: solver returned fewer real eigenvalues than requested");

  double sigma_max = std::abs(evals(evals.size() - 1));
  double neg_tol = 1e-8 * std::max(1.0, sigma_max);
  if (evals(0) < -neg_tol)
    throw std::runtime_error("steklov_solve: negative eigenvalue beyond tolerance, value " +
                             std::to_string(evals(0)));

  std::vector<SteklovMode> modes;
  modes.reserve(n_modes);
  for (int m = 0; m < n_modes; ++m) {
    SteklovMode mode;
    double sig_scaled = std::max(0.0, evals(m));
    mode.sigma = ops.scale * sig_scaled;
    Eigen::VectorXd psi = evecs.col(m);
    mode.residual = (ops.A_sym * psi - evals(m) * (ops.S_sym_scaled * psi)).norm();
    Eigen::VectorXd phi = psi.cwiseQuotient(sqw);
    double nrm = std::sqrt(phi.cwiseAbs2().dot(w));
    mode.trace = phi / nrm;
    modes.push_back(std::move(mode));
  }
  return modes;
}

Eigen::VectorXd dtn_apply(const LayerOperators& ops, const Eigen::VectorXd& f) {
  if (!ops.S_spd)
    throw std::runtime_error("dtn_apply: single layer not positive definite at solver scale");
  if (ops.condition_estimate > 1e14)
    throw std::runtime_error("dtn_apply: ill-conditioned single layer, condition estimate " +
                             std::to_string(ops.condition_estimate));
  Eigen::VectorXd sqw = ops.arclength_weights().cwiseSqrt();
  Eigen::VectorXd psi = f.cwiseProduct(sqw);
  Eigen::VectorXd g = ops.S_llt.solve(ops.A_sym * psi);
  return ops.scale * g.cwiseQuotient(sqw);
}

Eigen::VectorXcd dtn_apply(const LayerOperators& ops, const Eigen::VectorXcd& f) {
  Eigen::VectorXd re = dtn_apply(ops, Eigen::VectorXd(f.real()));
  Eigen::VectorXd im = dtn_apply(ops, Eigen::VectorXd(f.imag()));
  return re + Complex(0, 1) * im;
}

double boundary_inner(const LayerOperators& ops, const Eigen::VectorXd& f,
                      const Eigen::VectorXd& g) {
  return f.cwiseProduct(g).dot(ops.arclength_weights());
}

int dominant_wavenumber(const LayerOperators& ops, const Eigen::VectorXd& trace) {
  const int N = ops.n_per_component;
  const int ncomp = ops.domain.component_count();
  // Dominant component by weighted mass.
  int cbest = 0;
  double mbest = -1;
  for (int c = 0; c < ncomp; ++c) {
    double m = 0;
    for (int j = 0; j < N; ++j) {
      int idx = c * N + j;
      m += trace(idx) * trace(idx) * ops.nodes[idx].weight;
    }
    if (m > mbest) {
      mbest = m;
      cbest = c;
    }
  }
  std::vector<Complex> samples(N);
  for (int j = 0; j < N; ++j) samples[j] = trace(cbest * N + j);
  auto coeffs = fourier_coefficients(samples);
  int m0 = coefficient_min_frequency(N);
  int arg = 0;
  double best = -1;
  for (int k = 0; k < N; ++k) {
    if (std::abs(coeffs[k]) > best) {
      best = std::abs(coeffs[k]);
      arg = std::abs(m0 + k);
    }
  }
  return arg;
}

}  // namespace steklov
