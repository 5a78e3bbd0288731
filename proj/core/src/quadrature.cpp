#include "quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace scatterlab::detail {

namespace {

constexpr complex kI(0.0, 1.0);

// i/4 - (C + ln(k/2)) / (2 pi): the constant in the small-r expansion of Phi.
complex phi_constant(double k) {
  return complex(0.0, 0.25) - (kEulerGamma + std::log(0.5 * k)) / (2.0 * kPi);
}

// Coefficients c_0 (first entry) and c_m, m = 1..n, of the product rule for
// ln((a + sign cos tau) / 2), a >= 1, so that the integral against a
// trigonometric polynomial f of degree n is sum_j f(tau_j) sum_m c_m cos(m tau_j).
Eigen::VectorXd log_product_coefficients(double a_minus_one, int sign, int n) {
  const double a = 1.0 + a_minus_one;
  const double rho = 1.0 / (a + std::sqrt(a_minus_one * (a + 1.0)));
  const double h = kPi / n;
  Eigen::VectorXd c(n + 1);
  c[0] = h * (-std::log(2.0) - std::log(2.0 * rho));
  double power = 1.0;
  const double step = sign > 0 ? -rho : rho;
  for (int m = 1; m <= n; ++m) {
    power *= step;
    c[m] = (m < n ? -2.0 * h : -h) * power / m;
  }
  return c;
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

std::vector<double> kress_weights(int n) {
  std::vector<double> r(2 * n);
  for (int d = 0; d < 2 * n; ++d) {
    double sum = 0.0;
    for (int m = 1; m < n; ++m) {
      sum += std::cos(m * d * kPi / n) / m;
    }
    r[d] = -2.0 * kPi / n * sum - kPi / (static_cast<double>(n) * n) * (d % 2 == 0 ? 1.0 : -1.0);
  }
  return r;
}

Eigen::MatrixXd trig_differentiation(int n) {
  const int size = 2 * n;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j) {
        const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
        d(i, j) = 0.5 * sign / std::tan((i - j) * kPi / size);
      }
    }
  }
  return d;
}

double periodic_log(double u) {
  const double s = std::sin(0.5 * u);
  return std::log(4.0 * s * s);
}

ClosedNodes closed_nodes(const ParametrizedArc& arc, int nodes) {
  if (!arc.closed()) {
    throw std::invalid_argument("closed-curve quadrature needs a closed curve");
  }
  if (nodes < 4 || nodes % 2 != 0) {
    throw std::invalid_argument("closed-curve quadrature needs an even node count >= 4");
  }
  ClosedNodes g;
  g.arc = &arc;
  g.half = nodes / 2;
  for (int j = 0; j < nodes; ++j) {
    const double t = j * kPi / g.half;
    const double s = t / kPi - 1.0;
    g.t.push_back(t);
    g.s.push_back(s);
    g.x.push_back(arc.position(s));
    g.speed.push_back(arc.derivative(s).norm() / kPi);
  }
  return g;
}

OpenNodes open_nodes(const ParametrizedArc& arc, int nodes, int grading) {
  if (arc.closed()) {
    throw std::invalid_argument("open-arc quadrature needs an open arc");
  }
  if (nodes < 4) {
    throw std::invalid_argument("open-arc quadrature needs at least 4 nodes");
  }
  if (grading != 0 && grading != 1) {
    throw std::invalid_argument("open-arc grading must be 0 or 1");
  }
  OpenNodes g;
  g.arc = &arc;
  g.half = nodes;
  g.grading = grading;
  for (int j = 0; j < 2 * nodes; ++j) {
    const double t = (j + 0.5) * kPi / nodes;
    const double sh = std::sin(0.5 * t);
    const double ch = std::cos(0.5 * t);
    const double sigma = std::cos(t);
    double s = sigma;
    double dsdsigma = 1.0;
    if (grading == 1) {
      // s = sin(pi sigma / 2), written around the nearer endpoint.
      if (sigma >= 0.0) {
        const double e = std::sin(0.25 * kPi * 2.0 * sh * sh);
        s = 1.0 - 2.0 * e * e;
        dsdsigma = 0.5 * kPi * std::sin(0.5 * kPi * 2.0 * sh * sh);
      } else {
        const double e = std::sin(0.25 * kPi * 2.0 * ch * ch);
        s = -1.0 + 2.0 * e * e;
        dsdsigma = 0.5 * kPi * std::sin(0.5 * kPi * 2.0 * ch * ch);
      }
    }
    const double sin_t = std::sin(t);
    const Point xs = arc.derivative(s);
    g.t.push_back(t);
    g.half_sin2.push_back(sh * sh);
    g.half_cos2.push_back(ch * ch);
    g.s.push_back(s);
    g.x.push_back(arc.position(s));
    g.xs.push_back(xs);
    g.xss.push_back(arc.second_derivative(s));
    g.normal.push_back(Point(xs.y(), -xs.x()) / xs.norm());
    g.dsdt.push_back(-dsdsigma * sin_t);
    g.jacobian.push_back(xs.norm() * dsdsigma * std::abs(sin_t));
    double self_log = std::log(xs.norm() * dsdsigma);
    if (grading == 1) {
      self_log -= std::log(sin_t * sin_t);
    }
    g.self_log.push_back(self_log);
  }
  return g;
}

Point node_chord(const OpenNodes& g, int i, int j) {
  const double d_sigma = -2.0 * std::sin(0.5 * (g.t[i] + g.t[j])) * std::sin(0.5 * (g.t[i] - g.t[j]));
  double ds = d_sigma;
  if (g.grading == 1) {
    // sin(pi a/2) - sin(pi b/2) = 2 cos(pi (a+b)/4) sin(pi (a-b)/4), with the
    // cosine rewritten to avoid cancellation near either endpoint.
    const double sum = std::cos(g.t[i]) + std::cos(g.t[j]);
    const double c = sum >= 0.0
                         ? std::sin(0.5 * kPi * (g.half_sin2[i] + g.half_sin2[j]))
                         : std::sin(0.5 * kPi * (g.half_cos2[i] + g.half_cos2[j]));
    ds = 2.0 * c * std::sin(0.25 * kPi * d_sigma);
  }
  return g.arc->chord(g.s[j], ds);
}

ComplexMatrix assemble_closed(const ClosedNodes& g, const KernelFn& kernel,
                              const DiagonalFn& diagonal) {
  const int size = g.size();
  const double h = kPi / g.half;
  const std::vector<double> r = kress_weights(g.half);
  ComplexMatrix q(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const double w = r[((i - j) % size + size) % size];
      if (i == j) {
        const KernelValue kv = diagonal(i);
        q(i, j) = kv.log_part * w + h * kv.value;
        continue;
      }
      const Point d = g.arc->chord(g.s[j], g.s[i] - g.s[j]);
      const KernelValue kv = kernel(i, j, d, d.norm());
      q(i, j) = kv.log_part * w + h * (kv.value - kv.log_part * periodic_log(g.t[i] - g.t[j]));
    }
  }
  return q;
}

ComplexMatrix assemble_open(const OpenNodes& g, const KernelFn& kernel, const DiagonalFn& diagonal) {
  const int n = g.half;
  const int size = g.size();
  const double h = kPi / n;
  const std::vector<double> r = kress_weights(n);

  // cos(m tau_j) for the endpoint product rules.
  Eigen::MatrixXd cos_table;
  if (g.grading == 1) {
    cos_table.resize(n + 1, size);
    for (int m = 0; m <= n; ++m) {
      for (int j = 0; j < size; ++j) {
        cos_table(m, j) = std::cos(m * g.t[j]);
      }
    }
  }

  ComplexMatrix q(size, size);
  Eigen::VectorXd endpoint_weights = Eigen::VectorXd::Zero(size);
  for (int i = 0; i < size; ++i) {
    if (g.grading == 1) {
      const Eigen::VectorXd plus = log_product_coefficients(2.0 * g.half_sin2[i], -1, n);
      const Eigen::VectorXd minus = log_product_coefficients(2.0 * g.half_cos2[i], +1, n);
      endpoint_weights = 2.0 * cos_table.transpose() * (plus + minus);
    }
    for (int j = 0; j < size; ++j) {
      const double w = r[((i - j) % size + size) % size] + r[(i + j + 1) % size] + endpoint_weights[j];
      if (j == i || j == g.mirror(i)) {
        const KernelValue kv = diagonal(i);
        q(i, j) = kv.log_part * w + h * kv.value;
        continue;
      }
      double singular = periodic_log(g.t[i] - g.t[j]) + periodic_log(g.t[i] + g.t[j]);
      if (g.grading == 1) {
        singular += 2.0 * (std::log(g.half_sin2[i] + g.half_sin2[j]) +
                           std::log(g.half_cos2[i] + g.half_cos2[j]));
      }
      const Point d = node_chord(g, i, j);
      const KernelValue kv = kernel(i, j, d, d.norm());
      q(i, j) = kv.log_part * w + h * (kv.value - kv.log_part * singular);
    }
  }
  return q;
}

complex gradient_factor(double r, double k) { return kI * k / 4.0 * hankel1(1, k * r) / r; }

SplitKernel single_layer_kernel(const ClosedNodes& g, double k) {
  const complex c0 = phi_constant(k);
  return {
      [k](int, int, const Point&, double r) {
        return KernelValue{complex(0.0, 0.25) * hankel0_first(k * r), -bessel_j0(k * r) / (4.0 * kPi)};
      },
      [&g, c0](int i) {
        return KernelValue{c0 - std::log(g.speed[i]) / (2.0 * kPi), complex(-1.0 / (4.0 * kPi))};
      }};
}

SplitKernel single_layer_kernel(const OpenNodes& g, double k) {
  const complex c = phi_constant(k) + std::log(2.0) / (2.0 * kPi);
  return {
      [k](int, int, const Point&, double r) {
        return KernelValue{complex(0.0, 0.25) * hankel0_first(k * r), -bessel_j0(k * r) / (4.0 * kPi)};
      },
      [&g, c](int i) {
        return KernelValue{c - g.self_log[i] / (2.0 * kPi), complex(-1.0 / (4.0 * kPi))};
      }};
}

namespace {

// Shared coincident limit of both normal derivatives: nu.X'' / (4 pi |X'|^2).
KernelValue curvature_limit(const OpenNodes& g, int i) {
  return {g.normal[i].dot(g.xss[i]) / (4.0 * kPi * g.xs[i].squaredNorm()), 0.0};
}

}  // namespace

SplitKernel double_layer_kernel(const OpenNodes& g, double k) {
  return {
      [&g, k](int, int j, const Point& d, double r) {
        const double proj = g.normal[j].dot(d);
        return KernelValue{gradient_factor(r, k) * proj,
                           -k / (4.0 * kPi) * bessel_j(1, k * r) / r * proj};
      },
      [&g](int i) { return curvature_limit(g, i); }};
}

SplitKernel adjoint_double_layer_kernel(const OpenNodes& g, double k) {
  return {
      [&g, k](int i, int, const Point& d, double r) {
        const double proj = -g.normal[i].dot(d);
        return KernelValue{gradient_factor(r, k) * proj,
                           -k / (4.0 * kPi) * bessel_j(1, k * r) / r * proj};
      },
      [&g](int i) { return curvature_limit(g, i); }};
}

SplitKernel normal_product_kernel(const OpenNodes& g, double k) {
  const SplitKernel base = single_layer_kernel(g, k);
  return {
      [&g, base](int i, int j, const Point& d, double r) {
        KernelValue kv = base.off(i, j, d, r);
        const double nn = g.normal[i].dot(g.normal[j]);
        return KernelValue{kv.value * nn, kv.log_part * nn};
      },
      base.diagonal};
}

ComplexMatrix fold_columns(const ComplexMatrix& q, int half, double sign) {
  ComplexMatrix out(q.rows(), half);
  for (int j = 0; j < half; ++j) {
    out.col(j) = q.col(j) + sign * q.col(2 * half - 1 - j);
  }
  return out;
}

Eigen::MatrixXd extension(int half, double sign) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(2 * half, half);
  for (int j = 0; j < half; ++j) {
    e(j, j) = 1.0;
    e(2 * half - 1 - j, j) = sign;
  }
  return e;
}

void require_well_conditioned(double rcond, const std::string& what) {
  if (!(rcond > 1e-13)) {
    throw std::runtime_error(what + ": linear system is numerically singular (reciprocal condition " +
                             std::to_string(rcond) + ")");
  }
}

}  // namespace scatterlab::detail
