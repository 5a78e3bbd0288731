#include <Eigen/LU>

#include "quadrature.hpp"
#include "scatterlab/forward.hpp"

// Unknowns per arc: g = psi |dx/dt| (single-layer density with its jacobian,
// even on the double cover) and chi (double-layer density, the jump of u).
//
//   u_-      = S psi + K chi - chi/2            = -u_inc
//   du_+/dnu = K' psi - psi/2 + T chi           = -du_inc/dnu
//
// T is written in Maue form, T chi = d/ds S[d chi/ds] + k^2 nu . S[nu chi],
// with the tangential derivatives taken spectrally on the odd extension of chi.
// Neumann rows are multiplied by the signed arc-length rate so they stay
// bounded at the arc ends.

namespace scatterlab {

namespace {

struct ArcBlocks {
  ComplexMatrix single;        // Phi, density carries its jacobian
  ComplexMatrix double_layer;  // dPhi/dnu_y times jacobian
  ComplexMatrix adjoint;       // dPhi/dnu_x
  ComplexMatrix normal_pair;   // Phi nu_x.nu_y times jacobian
};

ArcBlocks self_blocks(const detail::OpenNodes& g, double k) {
  ArcBlocks out;
  const Eigen::VectorXd jac = Eigen::Map<const Eigen::VectorXd>(g.jacobian.data(), g.size());
  const auto sl = detail::single_layer_kernel(g, k);
  const auto dl = detail::double_layer_kernel(g, k);
  const auto adl = detail::adjoint_double_layer_kernel(g, k);
  const auto nn = detail::normal_product_kernel(g, k);
  out.single = detail::assemble_open(g, sl.off, sl.diagonal);
  out.double_layer = detail::assemble_open(g, dl.off, dl.diagonal) * jac.asDiagonal();
  out.adjoint = detail::assemble_open(g, adl.off, adl.diagonal);
  out.normal_pair = detail::assemble_open(g, nn.off, nn.diagonal) * jac.asDiagonal();
  return out;
}

ArcBlocks cross_blocks(const detail::OpenNodes& a, const detail::OpenNodes& b, double k) {
  ArcBlocks out;
  const Eigen::VectorXd jac = Eigen::Map<const Eigen::VectorXd>(b.jacobian.data(), b.size());
  out.single = detail::assemble_smooth(a, b, [&](int, int, const Point&, double r) {
    return fundamental_solution(r, Wavenumber(k));
  });
  out.double_layer = detail::assemble_smooth(a, b, [&](int, int j, const Point& d, double r) {
                       return detail::gradient_factor(r, k) * b.normal[j].dot(d);
                     }) *
                     jac.asDiagonal();
  out.adjoint = detail::assemble_smooth(a, b, [&](int i, int, const Point& d, double r) {
    return -detail::gradient_factor(r, k) * a.normal[i].dot(d);
  });
  out.normal_pair = detail::assemble_smooth(a, b, [&](int i, int j, const Point&, double r) {
                      return fundamental_solution(r, Wavenumber(k)) * a.normal[i].dot(b.normal[j]);
                    }) *
                    jac.asDiagonal();
  return out;
}

}  // namespace

FarFieldMatrix farfield_mixed_crack(const Curve& arcs, Wavenumber k, const DirectionSet& directions,
                                    const MixedCrackOptions& options) {
  if (arcs.empty()) {
    throw std::invalid_argument("crack needs at least one arc");
  }
  const bool mixed = options.faces == MixedCrackOptions::Faces::mixed;
  std::vector<detail::OpenNodes> parts;
  std::vector<Eigen::MatrixXd> diff;
  std::vector<int> offset;
  int total = 0;
  for (const auto& arc : arcs) {
    parts.push_back(detail::open_nodes(arc, options.nodes, options.grading));
    diff.push_back(detail::trig_differentiation(parts.back().half));
    offset.push_back(total);
    total += 2 * parts.back().half;
  }

  ComplexMatrix system = ComplexMatrix::Zero(total, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const auto& ga = parts[a];
    const int na = ga.half;
    // rho = signed d(arc length)/dt on the rows, negative on (0, pi).
    Eigen::VectorXd rho(na);
    for (int i = 0; i < na; ++i) {
      rho[i] = ga.xs[i].norm() * ga.dsdt[i];
    }
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const auto& gb = parts[b];
      const int nb = gb.half;
      const ArcBlocks q = a == b ? self_blocks(ga, k) : cross_blocks(ga, gb, k);
      const int row_d = offset[a];
      const int row_n = offset[a] + na;
      const int col_g = offset[b];
      const int col_c = offset[b] + nb;

      const ComplexMatrix s_even = 0.5 * detail::fold_columns(q.single.topRows(na), nb, 1.0);
      const ComplexMatrix d_even = 0.5 * detail::fold_columns(q.double_layer.topRows(na), nb, 1.0);
      system.block(row_d, col_g, na, nb) = s_even;
      system.block(row_d, col_c, na, nb) = d_even;
      if (!mixed) {
        system.block(row_n, col_g, na, nb) = s_even;
        system.block(row_n, col_c, na, nb) = d_even;
        continue;
      }

      system.block(row_n, col_g, na, nb) =
          rho.asDiagonal() * (0.5 * detail::fold_columns(q.adjoint.topRows(na), nb, 1.0));
      // d/dt of I(t) = -1/2 int Phi(x(t), y(tau)) omega'(tau) dtau, omega the odd extension.
      const ComplexMatrix inner = -0.5 * q.single * (diff[b] * detail::extension(nb, -1.0));
      const ComplexMatrix maue = (diff[a] * inner).topRows(na);
      system.block(row_n, col_c, na, nb) =
          maue + k * k * rho.asDiagonal() *
                     (0.5 * detail::fold_columns(q.normal_pair.topRows(na), nb, 1.0));
    }
    const double jump = 0.5;
    system.block(offset[a], offset[a] + na, na, na).diagonal().array() -= jump;
    if (mixed) {
      system.block(offset[a] + na, offset[a], na, na).diagonal().array() += jump;
    } else {
      system.block(offset[a] + na, offset[a] + na, na, na).diagonal().array() += jump;
    }
  }

  const int n_dir = directions.size();
  ComplexMatrix incident(total, n_dir);
  ComplexMatrix outgoing(n_dir, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const auto& ga = parts[a];
    const int na = ga.half;
    const double w = kPi / na;
    for (int j = 0; j < na; ++j) {
      const Point& x = ga.x[j];
      const Point& nu = ga.normal[j];
      const double rho = ga.xs[j].norm() * ga.dsdt[j];
      for (int m = 0; m < n_dir; ++m) {
        const Point& d = directions[m];
        const complex wave = std::polar(1.0, k * x.dot(d));
        incident(offset[a] + j, m) = -wave;
        incident(offset[a] + na + j, m) =
            mixed ? -rho * complex(0.0, k * nu.dot(d)) * wave : -wave;
        const complex back = std::polar(1.0, -k * x.dot(d));
        outgoing(m, offset[a] + j) = w * back;
        outgoing(m, offset[a] + na + j) = w * complex(0.0, -k * d.dot(nu)) * back * ga.jacobian[j];
      }
    }
  }

  Eigen::PartialPivLU<ComplexMatrix> lu(system);
  detail::require_well_conditioned(lu.rcond(), "mixed crack boundary system");
  const ComplexMatrix density = lu.solve(incident);
  const ComplexMatrix entries = directions.weight() * farfield_prefactor(k) * (outgoing * density);
  return FarFieldMatrix(directions, k, entries, mixed ? "mixed-crack" : "mixed-crack-dirichlet");
}

}  // namespace scatterlab
