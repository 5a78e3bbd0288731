#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/LU>

#include "quadrature.hpp"
#include "scatterlab/forward.hpp"

namespace scatterlab {

namespace {

using Polygon = std::vector<Point>;

double signed_area(const Polygon& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % p.size()];
    a += u.x() * v.y() - v.x() * u.y();
  }
  return 0.5 * a;
}

Polygon sample_boundary(const ParametrizedArc& arc, int vertices) {
  if (!arc.closed()) {
    throw std::invalid_argument("medium support must be bounded by closed curves");
  }
  Polygon p;
  p.reserve(vertices);
  for (int j = 0; j < vertices; ++j) {
    p.push_back(arc.position(-1.0 + 2.0 * j / vertices));
  }
  if (signed_area(p) < 0.0) {
    std::reverse(p.begin(), p.end());
  }
  return p;
}

// Sutherland-Hodgman against one axis-aligned half plane: keep coord(axis) * side <= bound * side.
Polygon clip(const Polygon& in, int axis, double bound, double side) {
  Polygon out;
  if (in.empty()) {
    return out;
  }
  auto inside = [&](const Point& p) { return side * p[axis] <= side * bound; };
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Point& cur = in[i];
    const Point& prev = in[(i + in.size() - 1) % in.size()];
    const bool cur_in = inside(cur);
    const bool prev_in = inside(prev);
    if (cur_in != prev_in) {
      const double t = (bound - prev[axis]) / (cur[axis] - prev[axis]);
      out.push_back(prev + t * (cur - prev));
    }
    if (cur_in) {
      out.push_back(cur);
    }
  }
  return out;
}

bool point_in_polygon(const Polygon& p, const Point& q) {
  bool inside = false;
  for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
    if ((p[i].y() > q.y()) != (p[j].y() > q.y())) {
      const double x = p[j].x() + (q.y() - p[j].y()) * (p[i].x() - p[j].x()) / (p[i].y() - p[j].y());
      if (q.x() < x) {
        inside = !inside;
      }
    }
  }
  return inside;
}

struct Cell {
  int ix;
  int iy;
  double area;
  Point centroid;
  bool full;
};

// Integral of Phi(0, y) over the disk of radius rho.
complex disk_self_integral(double rho, double k) {
  return complex(0.0, kPi * rho / (2.0 * k)) * hankel1(1, k * rho) - 1.0 / (k * k);
}

}  // namespace

FarFieldMatrix farfield_medium(const MediumSpec& spec, Wavenumber k, const DirectionSet& directions) {
  if (spec.support.empty()) {
    throw std::invalid_argument("medium needs a support");
  }
  if (spec.cells < 4) {
    throw std::invalid_argument("medium grid needs at least 4 cells per side");
  }

  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  double perimeter = 0.0;
  std::vector<Polygon> probe_polys;
  for (const auto& arc : spec.support) {
    probe_polys.push_back(sample_boundary(arc, 4096));
    perimeter += arc.length();
  }
  for (const auto& poly : probe_polys) {
    for (const Point& p : poly) {
      lo_x = std::min(lo_x, p.x());
      lo_y = std::min(lo_y, p.y());
      hi_x = std::max(hi_x, p.x());
      hi_y = std::max(hi_y, p.y());
    }
  }
  const double h = std::max(hi_x - lo_x, hi_y - lo_y) / spec.cells;
  const int nx = static_cast<int>(std::ceil((hi_x - lo_x) / h - 1e-9));
  const int ny = static_cast<int>(std::ceil((hi_y - lo_y) / h - 1e-9));
  const Point origin(0.5 * (lo_x + hi_x) - 0.5 * nx * h, 0.5 * (lo_y + hi_y) - 0.5 * ny * h);

  // Boundary polygons fine enough that every edge is much shorter than a cell.
  const int vertices = std::max(4096, static_cast<int>(8.0 * perimeter / h));
  std::vector<Polygon> polys = probe_polys;
  if (vertices > 4096) {
    for (std::size_t c = 0; c < spec.support.size(); ++c) {
      polys[c] = sample_boundary(spec.support[c], vertices);
    }
  }

  // Cells touched by a boundary edge get clipped; the rest are all in or all out.
  std::vector<char> touched(static_cast<std::size_t>(nx) * ny, 0);
  for (const auto& poly : polys) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& u = poly[i];
      const Point& v = poly[(i + 1) % poly.size()];
      const int x0 = std::clamp(static_cast<int>(std::floor((std::min(u.x(), v.x()) - origin.x()) / h)), 0, nx - 1);
      const int x1 = std::clamp(static_cast<int>(std::floor((std::max(u.x(), v.x()) - origin.x()) / h)), 0, nx - 1);
      const int y0 = std::clamp(static_cast<int>(std::floor((std::min(u.y(), v.y()) - origin.y()) / h)), 0, ny - 1);
      const int y1 = std::clamp(static_cast<int>(std::floor((std::max(u.y(), v.y()) - origin.y()) / h)), 0, ny - 1);
      for (int ix = x0; ix <= x1; ++ix) {
        for (int iy = y0; iy <= y1; ++iy) {
          touched[static_cast<std::size_t>(ix) * ny + iy] = 1;
        }
      }
    }
  }

  std::vector<Cell> cells;
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) {
      const double x_lo = origin.x() + ix * h;
      const double y_lo = origin.y() + iy * h;
      const Point center(x_lo + 0.5 * h, y_lo + 0.5 * h);
      if (!touched[static_cast<std::size_t>(ix) * ny + iy]) {
        for (const auto& poly : polys) {
          if (point_in_polygon(poly, center)) {
            cells.push_back({ix, iy, h * h, center, true});
            break;
          }
        }
        continue;
      }
      double area = 0.0;
      Point moment(0.0, 0.0);
      for (const auto& poly : polys) {
        Polygon piece = clip(poly, 0, x_lo, -1.0);
        piece = clip(piece, 0, x_lo + h, 1.0);
        piece = clip(piece, 1, y_lo, -1.0);
        piece = clip(piece, 1, y_lo + h, 1.0);
        if (piece.size() < 3) {
          continue;
        }
        for (std::size_t i = 0; i < piece.size(); ++i) {
          const Point& u = piece[i];
          const Point& v = piece[(i + 1) % piece.size()];
          const double cross = u.x() * v.y() - v.x() * u.y();
          area += 0.5 * cross;
          moment += cross * (u + v) / 6.0;
        }
      }
      if (area > 1e-12 * h * h) {
        cells.push_back({ix, iy, area, moment / area, false});
      }
    }
  }

  const int count = static_cast<int>(cells.size());
  Eigen::VectorXd strength(count);  // k^2 q a
  for (int j = 0; j < count; ++j) {
    const double q = spec.profile ? spec.profile(cells[j].centroid) : spec.contrast;
    if (!(q >= 0.0) || !std::isfinite(q)) {
      throw std::invalid_argument("medium contrast must be finite and non-negative");
    }
    strength[j] = k * k * q * cells[j].area;
  }

  // Phi between full-cell centres depends only on the index offset.
  std::vector<complex> table(static_cast<std::size_t>(nx) * ny);
  for (int dx = 0; dx < nx; ++dx) {
    for (int dy = 0; dy < ny; ++dy) {
      if (dx != 0 || dy != 0) {
        table[static_cast<std::size_t>(dx) * ny + dy] = fundamental_solution(h * std::hypot(dx, dy), k);
      }
    }
  }
  auto phi_between = [&](const Cell& a, const Cell& b) {
    if (a.full && b.full) {
      return table[static_cast<std::size_t>(std::abs(a.ix - b.ix)) * ny + std::abs(a.iy - b.iy)];
    }
    return fundamental_solution(a.centroid, b.centroid, k);
  };

  ComplexMatrix system(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j) {
        const double rho = std::sqrt(cells[i].area / kPi);
        const double q_area = strength[i] / (k * k * cells[i].area);
        system(i, i) = 1.0 - k * k * q_area * disk_self_integral(rho, k);
      } else {
        system(i, j) = -strength[j] * phi_between(cells[i], cells[j]);
      }
    }
  }

  const int n_dir = directions.size();
  ComplexMatrix incident(count, n_dir);
  ComplexMatrix outgoing(n_dir, count);
  for (int j = 0; j < count; ++j) {
    for (int m = 0; m < n_dir; ++m) {
      const double phase = k * cells[j].centroid.dot(directions[m]);
      incident(j, m) = std::polar(1.0, phase);
      outgoing(m, j) = strength[j] * std::polar(1.0, -phase);
    }
  }

  Eigen::PartialPivLU<ComplexMatrix> lu(system);
  detail::require_well_conditioned(lu.rcond(), "Lippmann-Schwinger system");
  const ComplexMatrix total_field = lu.solve(incident);
  const ComplexMatrix entries = directions.weight() * farfield_prefactor(k) * (outgoing * total_field);
  return FarFieldMatrix(directions, k, entries, "medium");
}

}  // namespace scatterlab
