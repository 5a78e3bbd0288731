#pragma once

// Periodic quadrature for logarithmically singular kernels on closed curves
// and open arcs. Internal to the library.

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "scatterlab/geometry.hpp"
#include "scatterlab/operators.hpp"

namespace scatterlab::detail {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

/// Weights R_d, d = 0..2n-1, with
///   int_0^{2pi} ln(4 sin^2((t_i - tau)/2)) f(tau) dtau ~ sum_j R_{(i-j) mod 2n} f(t_j)
/// on 2n equispaced nodes.
std::vector<double> kress_weights(int n);

/// Spectral derivative on 2n equispaced nodes: D_ij = (-1)^(i-j) cot((t_i - t_j)/2) / 2.
Eigen::MatrixXd trig_differentiation(int n);

/// ln(4 sin^2(u/2)).
double periodic_log(double u);

/// Closed curve sampled at t_j = j pi / n, j = 0..2n-1, t = pi (s + 1).
struct ClosedNodes {
  const ParametrizedArc* arc = nullptr;
  int half = 0;
  std::vector<double> t;
  std::vector<double> s;
  std::vector<Point> x;
  std::vector<double> speed;  // |dx/dt|
  int size() const { return 2 * half; }
};

ClosedNodes closed_nodes(const ParametrizedArc& arc, int nodes);

/// Open arc on the double cover: t_j = (j + 1/2) pi / n, j = 0..2n-1, sigma = cos t,
/// s = sigma (grading 0) or s = sin(pi sigma / 2) (grading 1). Node j and its
/// mirror 2n-1-j map to the same point of the arc.
struct OpenNodes {
  const ParametrizedArc* arc = nullptr;
  int half = 0;
  int grading = 0;
  std::vector<double> t;
  std::vector<double> half_sin2;  // sin^2(t/2) = (1 - sigma)/2
  std::vector<double> half_cos2;  // cos^2(t/2) = (1 + sigma)/2
  std::vector<double> s;
  std::vector<Point> x;
  std::vector<Point> xs;       // dX/ds
  std::vector<Point> xss;      // d2X/ds2
  std::vector<Point> normal;   // (X_2', -X_1') / |X'|
  std::vector<double> dsdt;    // signed ds/dt
  std::vector<double> jacobian;  // |dx/dt|
  std::vector<double> self_log;  // log term in the coincident limit of the split kernel
  int size() const { return 2 * half; }
  int mirror(int j) const { return 2 * half - 1 - j; }
};

OpenNodes open_nodes(const ParametrizedArc& arc, int nodes, int grading);

/// x_i - x_j without cancellation for close nodes.
Point node_chord(const OpenNodes& g, int i, int j);

/// A kernel K(x, y) = A(x, y) ln|x - y|^2 + smooth, evaluated off the diagonal.
struct KernelValue {
  complex value;
  complex log_part;
};

/// Off-diagonal evaluator: (row node, column node, x_i - x_j, |x_i - x_j|).
using KernelFn = std::function<KernelValue(int, int, const Point&, double)>;
/// At coincident points: the limit of the smooth remainder (value) and A(x, x) (log_part).
using DiagonalFn = std::function<KernelValue(int)>;

/// Q with int_0^{2pi} K(t_i, tau) f(tau) dtau ~ sum_j Q_ij f(t_j) on a closed curve.
ComplexMatrix assemble_closed(const ClosedNodes& g, const KernelFn& kernel,
                              const DiagonalFn& diagonal);

/// Same on the double cover of an open arc, all 2n rows and columns.
ComplexMatrix assemble_open(const OpenNodes& g, const KernelFn& kernel, const DiagonalFn& diagonal);

/// Plain trapezoid rule between distinct components: Q_ij = (pi / n_col) K(x_i, y_j).
template <typename RowNodes, typename ColNodes, typename Fn>
ComplexMatrix assemble_smooth(const RowNodes& rows, const ColNodes& cols, Fn&& kernel) {
  ComplexMatrix q(rows.size(), cols.size());
  const double w = kPi / cols.half;
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols.size(); ++j) {
      const Point d = rows.x[i] - cols.x[j];
      q(i, j) = w * kernel(i, j, d, d.norm());
    }
  }
  return q;
}

/// Log-split Helmholtz kernels on the node sets above.
struct SplitKernel {
  KernelFn off;
  DiagonalFn diagonal;
};

/// Phi(x, y) = (i/4) H_0(k|x - y|).
SplitKernel single_layer_kernel(const ClosedNodes& g, double k);
SplitKernel single_layer_kernel(const OpenNodes& g, double k);
/// dPhi/dnu(y).
SplitKernel double_layer_kernel(const OpenNodes& g, double k);
/// dPhi/dnu(x).
SplitKernel adjoint_double_layer_kernel(const OpenNodes& g, double k);
/// Phi(x, y) nu(x).nu(y).
SplitKernel normal_product_kernel(const OpenNodes& g, double k);

/// (i k / 4) H_1(k r) / r, the radial factor of both normal derivatives of Phi.
complex gradient_factor(double r, double k);

/// Folds 2n columns onto n unknowns for even (sign = +1) or odd (sign = -1)
/// densities: out_ij = Q_ij + sign * Q_{i, mirror(j)}.
ComplexMatrix fold_columns(const ComplexMatrix& q, int half, double sign);

/// Unfolding matrix E (2n x n) for even or odd extension.
Eigen::MatrixXd extension(int half, double sign);

/// Reciprocal condition estimate from an LU factorisation; throws
/// std::runtime_error with `what` when the system is numerically singular.
void require_well_conditioned(double rcond, const std::string& what);

}  // namespace scatterlab::detail
