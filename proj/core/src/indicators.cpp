#include "scatterlab/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "scatterlab/probes.hpp"

namespace scatterlab {

IndicatorField::IndicatorField(SamplingGrid grid, std::string method)
    : grid_(grid), method_(std::move(method)), values_(grid.point_count(), 0.0) {}

std::size_t IndicatorField::index(int i, int j) const {
  const int m = grid_.resolution();
  if (i < -m || i > m || j < -m || j > m) {
    throw std::out_of_range("grid index outside [-M, M]");
  }
  return static_cast<std::size_t>(i + m) * grid_.side() + static_cast<std::size_t>(j + m);
}

double IndicatorField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double IndicatorField::max() const { return *std::max_element(values_.begin(), values_.end()); }

namespace {

// Sweeps count(base + sign * D(z) gram D(z)^H) over the grid, exploiting the
// translation covariance of every probe Gram.
IndicatorField translated_sweep(const FarFieldMatrix& f, const SamplingGrid& grid,
                                const HermitianMatrix& base, const HermitianMatrix& gram_at_origin,
                                double sign, double tol, std::string method) {
  IndicatorField field(grid, std::move(method));
  const int m = grid.resolution();
  const ComplexMatrix& b = base.matrix();
  const ComplexMatrix g = sign * gram_at_origin.matrix();
#pragma omp parallel for schedule(dynamic)
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const ComplexVector d = test_vector_phi(grid.point(i, j), f.wavenumber(), f.directions());
      const ComplexMatrix shifted = b + d.asDiagonal() * g * d.conjugate().asDiagonal();
      field.at(i, j) = count_negative_eigs(HermitianMatrix(shifted), tol);
    }
  }
  return field;
}

}  // namespace

IndicatorField mm_obstacle_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                                 double tol) {
  const HermitianMatrix gram = herglotz_gram_square(Point::Zero(), r, f.wavenumber(), f.directions());
  return translated_sweep(f, grid, -hermitian_part(f.matrix()), gram, -1.0, tol, "mm-square");
}

IndicatorField mm_medium_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                               double alpha, double tol) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive");
  }
  const HermitianMatrix gram = herglotz_gram_square(Point::Zero(), r, f.wavenumber(), f.directions());
  return translated_sweep(f, grid, hermitian_part(f.matrix()), gram, -alpha, tol, "mm-square-medium");
}

IndicatorField mm_crack_field(const FarFieldMatrix& f, const SamplingGrid& grid, double eta,
                              double r, double tol) {
  const HermitianMatrix gram =
      herglotz_gram_segment(Point::Zero(), eta, r, f.wavenumber(), f.directions());
  return translated_sweep(f, grid, -hermitian_part(f.matrix()), gram, -1.0, tol, "mm-segment");
}

IndicatorField mm_crack_field(const FarFieldMatrix& f, const SamplingGrid& grid,
                              const std::vector<double>& etas, double r, double tol) {
  if (etas.empty()) {
    throw std::invalid_argument("need at least one segment angle");
  }
  IndicatorField out = mm_crack_field(f, grid, etas.front(), r, tol);
  for (std::size_t e = 1; e < etas.size(); ++e) {
    const IndicatorField next = mm_crack_field(f, grid, etas[e], r, tol);
    const int m = grid.resolution();
    for (int i = -m; i <= m; ++i) {
      for (int j = -m; j <= m; ++j) {
        out.at(i, j) = std::min(out.at(i, j), next.at(i, j));
      }
    }
  }
  return out;
}

IndicatorField mm_mixed_shifting_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                                       double tol) {
  const HermitianMatrix gram = herglotz_gram_circle(Point::Zero(), r, f.wavenumber(), f.directions());
  return translated_sweep(f, grid, hermitian_part(f.matrix()), gram, 1.0, tol, "mm-circle-shift");
}

IndicatorField mm_mixed_shrinking_field(const FarFieldMatrix& f, const SamplingGrid& grid,
                                        const Point& p, double tol) {
  IndicatorField field(grid, "mm-circle-shrink");
  const HermitianMatrix base = hermitian_part(f.matrix());
  const int m = grid.resolution();
  // Many grid points share a radius; each distinct radius is evaluated once.
  std::map<double, int> by_radius;
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const Point z = grid.point(i, j);
      by_radius.emplace(std::hypot(z.x() - p.x(), z.y() - p.y()), 0);
    }
  }
  std::vector<std::map<double, int>::iterator> entries;
  for (auto it = by_radius.begin(); it != by_radius.end(); ++it) {
    entries.push_back(it);
  }
#pragma omp parallel for schedule(dynamic)
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const double radius = entries[e]->first;
    const HermitianMatrix op =
        radius > 0.0 ? base + herglotz_gram_circle(p, radius, f.wavenumber(), f.directions()) : base;
    entries[e]->second = count_negative_eigs(op, tol);
  }
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const Point z = grid.point(i, j);
      field.at(i, j) = by_radius.at(std::hypot(z.x() - p.x(), z.y() - p.y()));
    }
  }
  return field;
}

IndicatorField fm_field(const FarFieldMatrix& f, const SamplingGrid& grid, double drop_tol) {
  IndicatorField field(grid, "fm");
  const EigenSystem system = eigensystem(factorization_operator(f.matrix()));
  const int m = grid.resolution();
  const double w = f.directions().weight();
  // Surfaces a numerically zero operator before entering the parallel loop.
  picard_indicator(system, test_vector_phi(Point::Zero(), f.wavenumber(), f.directions()), w, drop_tol);
#pragma omp parallel for schedule(static)
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      const ComplexVector phi = test_vector_phi(grid.point(i, j), f.wavenumber(), f.directions());
      field.at(i, j) = picard_indicator(system, phi, w, drop_tol);
    }
  }
  return field;
}

}  // namespace scatterlab
