#include <Eigen/LU>

#include "quadrature.hpp"
#include "scatterlab/forward.hpp"

namespace scatterlab {

FarFieldMatrix farfield_dirichlet_crack(const Curve& arcs, Wavenumber k,
                                        const DirectionSet& directions, int nodes) {
  if (arcs.empty()) {
    throw std::invalid_argument("crack needs at least one arc");
  }
  std::vector<detail::OpenNodes> parts;
  std::vector<int> offset;
  int total = 0;
  for (const auto& arc : arcs) {
    parts.push_back(detail::open_nodes(arc, nodes, 0));
    offset.push_back(total);
    total += parts.back().half;
  }

  // Rows are the first n nodes of each arc (one per arc point); columns fold
  // the even density from the double cover.
  ComplexMatrix system(total, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const int na = parts[a].half;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const int nb = parts[b].half;
      ComplexMatrix q;
      if (a == b) {
        const auto kernel = detail::single_layer_kernel(parts[a], k);
        q = detail::assemble_open(parts[a], kernel.off, kernel.diagonal);
      } else {
        q = detail::assemble_smooth(parts[a], parts[b], [&](int, int, const Point&, double r) {
          return fundamental_solution(r, k);
        });
      }
      system.block(offset[a], offset[b], na, nb) = 0.5 * detail::fold_columns(q.topRows(na), nb, 1.0);
    }
  }

  const int n_dir = directions.size();
  ComplexMatrix incident(total, n_dir);
  ComplexMatrix outgoing(n_dir, total);
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const double w = kPi / parts[a].half;
    for (int j = 0; j < parts[a].half; ++j) {
      const Point& x = parts[a].x[j];
      for (int m = 0; m < n_dir; ++m) {
        incident(offset[a] + j, m) = -std::polar(1.0, k * x.dot(directions[m]));
        outgoing(m, offset[a] + j) = w * std::polar(1.0, -k * x.dot(directions[m]));
      }
    }
  }

  Eigen::PartialPivLU<ComplexMatrix> lu(system);
  detail::require_well_conditioned(lu.rcond(), "crack single-layer equation");
  const ComplexMatrix density = lu.solve(incident);
  const ComplexMatrix entries = directions.weight() * farfield_prefactor(k) * (outgoing * density);
  return FarFieldMatrix(directions, k, entries, "dirichlet-crack");
}

}  // namespace scatterlab
