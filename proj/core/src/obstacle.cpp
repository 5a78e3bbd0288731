#include <Eigen/LU>

#include "quadrature.hpp"
#include "scatterlab/forward.hpp"

namespace scatterlab {

FarFieldMatrix farfield_dirichlet_obstacle(const Curve& boundary, Wavenumber k,
                                           const DirectionSet& directions, int nodes) {
  if (boundary.empty()) {
    throw std::invalid_argument("obstacle needs at least one boundary curve");
  }
  if (nodes < 4 || nodes % 2 != 0) {
    throw std::invalid_argument("obstacle solver needs an even node count >= 4");
  }
  std::vector<detail::ClosedNodes> parts;
  std::vector<int> offset;
  int total = 0;
  for (const auto& arc : boundary) {
    parts.push_back(detail::closed_nodes(arc, nodes));
    offset.push_back(total);
    total += parts.back().size();
  }

  ComplexMatrix system(total, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (a == b) {
        const auto kernel = detail::single_layer_kernel(parts[a], k);
        system.block(offset[a], offset[b], parts[a].size(), parts[b].size()) =
            detail::assemble_closed(parts[a], kernel.off, kernel.diagonal);
      } else {
        system.block(offset[a], offset[b], parts[a].size(), parts[b].size()) =
            detail::assemble_smooth(parts[a], parts[b], [&](int, int, const Point&, double r) {
              return fundamental_solution(r, k);
            });
      }
    }
  }

  const int n_dir = directions.size();
  ComplexMatrix incident(total, n_dir);
  ComplexMatrix outgoing(n_dir, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const double w = kPi / parts[a].half;
    for (int j = 0; j < parts[a].size(); ++j) {
      const Point& x = parts[a].x[j];
      for (int m = 0; m < n_dir; ++m) {
        incident(offset[a] + j, m) = -std::polar(1.0, k * x.dot(directions[m]));
        outgoing(m, offset[a] + j) = w * std::polar(1.0, -k * x.dot(directions[m]));
      }
    }
  }

  Eigen::PartialPivLU<ComplexMatrix> lu(system);
  detail::require_well_conditioned(
      lu.rcond(), "obstacle single-layer equation (k^2 may be an interior Dirichlet eigenvalue)");
  const ComplexMatrix density = lu.solve(incident);
  const ComplexMatrix entries = directions.weight() * farfield_prefactor(k) * (outgoing * density);
  return FarFieldMatrix(directions, k, entries, "dirichlet-obstacle");
}

}  // namespace scatterlab
