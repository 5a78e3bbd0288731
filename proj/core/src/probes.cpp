#include "scatterlab/probes.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace scatterlab {

namespace {

// Fills (2 pi / N) f(theta_m - x_l) and symmetrises.
template <typename Fn>
HermitianMatrix assemble(const DirectionSet& dirs, Fn&& closed_form) {
  const int n = dirs.size();
  ComplexMatrix g(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      g(l, m) = dirs.weight() * closed_form(Point(dirs[m] - dirs[l]));
    }
  }
  return HermitianMatrix(g);
}

}  // namespace

HermitianMatrix herglotz_gram_square(const Point& center, double side, Wavenumber k,
                                     const DirectionSet& directions) {
  validate(SquareProbe{center, side});
  return assemble(directions, [&](const Point& d) {
    return side * side * std::polar(1.0, k * d.dot(center)) * sinc(0.5 * k * side * d.x()) *
           sinc(0.5 * k * side * d.y());
  });
}

HermitianMatrix herglotz_gram_segment(const Point& center, double eta, double length, Wavenumber k,
                                      const DirectionSet& directions) {
  validate(SegmentProbe{center, eta, length});
  const Point axis(std::cos(eta), std::sin(eta));
  return assemble(directions, [&](const Point& d) {
    return length * std::polar(1.0, k * d.dot(center)) * sinc(0.5 * length * k * axis.dot(d));
  });
}

HermitianMatrix herglotz_gram_circle(const Point& center, double radius, Wavenumber k,
                                     const DirectionSet& directions) {
  validate(CircleProbe{center, radius});
  return assemble(directions, [&](const Point& d) {
    return 2.0 * kPi * radius * std::polar(1.0, k * d.dot(center)) * bessel_j0(k * radius * d.norm());
  });
}

HermitianMatrix herglotz_gram_curve(const ParametrizedArc& curve, Wavenumber k,
                                    const DirectionSet& directions, int nodes) {
  if (nodes < 2) {
    throw std::invalid_argument("curve Gram needs at least 2 nodes");
  }
  std::vector<Point> points;
  std::vector<double> weights;
  if (curve.closed()) {
    for (int j = 0; j < nodes; ++j) {
      const double s = -1.0 + 2.0 * j / nodes;
      points.push_back(curve.position(s));
      weights.push_back(2.0 / nodes * curve.derivative(s).norm());
    }
  } else {
    const auto rule = detail::gauss_legendre(nodes);
    for (int j = 0; j < nodes; ++j) {
      points.push_back(curve.position(rule.nodes[j]));
      weights.push_back(rule.weights[j] * curve.derivative(rule.nodes[j]).norm());
    }
  }
  return assemble(directions, [&](const Point& d) {
    complex sum = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      sum += weights[j] * std::polar(1.0, k * points[j].dot(d));
    }
    return sum;
  });
}

HermitianMatrix herglotz_gram(const ProbeShape& probe, Wavenumber k, const DirectionSet& directions) {
  struct Visitor {
    Wavenumber k;
    const DirectionSet& dirs;
    HermitianMatrix operator()(const SquareProbe& p) const {
      return herglotz_gram_square(p.center, p.side, k, dirs);
    }
    HermitianMatrix operator()(const SegmentProbe& p) const {
      return herglotz_gram_segment(p.center, p.angle, p.length, k, dirs);
    }
    HermitianMatrix operator()(const CircleProbe& p) const {
      return herglotz_gram_circle(p.center, p.radius, k, dirs);
    }
    HermitianMatrix operator()(const CurveProbe& p) const { return herglotz_gram_curve(p.arc, k, dirs); }
  };
  return std::visit(Visitor{k, directions}, probe);
}

ComplexVector test_vector_phi(const Point& z, Wavenumber k, const DirectionSet& directions) {
  ComplexVector phi(directions.size());
  for (int l = 0; l < directions.size(); ++l) {
    phi[l] = std::polar(1.0, -k * directions[l].dot(z));
  }
  return phi;
}

HermitianMatrix translate_gram(const HermitianMatrix& gram, const ComplexVector& phases) {
  if (phases.size() != gram.size()) {
    throw std::invalid_argument("translate_gram: dimension mismatch");
  }
  return HermitianMatrix(phases.asDiagonal() * gram.matrix() * phases.conjugate().asDiagonal());
}

}  // namespace scatterlab
