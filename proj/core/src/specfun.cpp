#include "scatterlab/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

namespace scatterlab {

Wavenumber::Wavenumber(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("wavenumber must be positive and finite, got " + std::to_string(k));
  }
}

double sinc(double t) {
  // Below ~1e-4 the two-term series is exact to double precision.
  if (std::abs(t) < 1e-4) {
    return 1.0 - t * t / 6.0;
  }
  return std::sin(t) / t;
}

double bessel_j0(double t) { return bessel_j(0, t); }

double bessel_j(int order, double t) {
  if (!(t >= 0.0)) {
    throw std::domain_error("bessel_j: argument must be non-negative");
  }
  const int n = std::abs(order);
  const double value = boost::math::cyl_bessel_j(n, t);
  return (order < 0 && (n % 2 == 1)) ? -value : value;
}

double bessel_y(int order, double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("bessel_y: argument must be positive");
  }
  const int n = std::abs(order);
  const double value = boost::math::cyl_neumann(n, t);
  return (order < 0 && (n % 2 == 1)) ? -value : value;
}

complex hankel1(int order, double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("hankel1: argument must be positive");
  }
  return {bessel_j(order, t), bessel_y(order, t)};
}

complex hankel0_first(double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("hankel0_first: argument must be positive");
  }
  return {boost::math::cyl_bessel_j(0, t), boost::math::cyl_neumann(0, t)};
}

complex fundamental_solution(double r, Wavenumber k) {
  if (!(r > 0.0)) {
    throw std::domain_error("fundamental_solution: coincident points");
  }
  return complex(0.0, 0.25) * hankel0_first(k.value() * r);
}

complex fundamental_solution(const Point& x, const Point& y, Wavenumber k) {
  return fundamental_solution((x - y).norm(), k);
}

}  // namespace scatterlab
