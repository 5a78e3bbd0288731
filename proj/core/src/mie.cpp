#include <cmath>
#include <stdexcept>

#include "scatterlab/forward.hpp"

namespace scatterlab {

namespace {
constexpr int kMaxOrder = 200;
}

complex mie_disk_farfield(double radius, const Point& center, Wavenumber k, const Point& xhat,
                          const Point& theta) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("disk radius must be positive");
  }
  const double ka = k * radius;
  const double angle = std::atan2(theta.x() * xhat.y() - theta.y() * xhat.x(), theta.dot(xhat));

  complex sum = bessel_j(0, ka) / hankel1(0, ka);
  int n = 1;
  for (;; ++n) {
    if (n > kMaxOrder) {
      throw std::runtime_error("disk series did not converge within order 200");
    }
    const complex term = 2.0 * bessel_j(n, ka) / hankel1(n, ka) * std::cos(n * angle);
    sum += term;
    // Past n ~ ka the coefficients fall off faster than geometrically.
    if (n > ka + 1.0 && std::abs(2.0 * bessel_j(n, ka) / hankel1(n, ka)) < 1e-15) {
      break;
    }
  }
  const complex scale = -std::sqrt(2.0 / (kPi * k)) * std::polar(1.0, -kPi / 4.0);
  return scale * sum * std::polar(1.0, k * (theta - xhat).dot(center));
}

FarFieldMatrix mie_disk_matrix(double radius, const Point& center, Wavenumber k,
                               const DirectionSet& directions) {
  const int n = directions.size();
  ComplexMatrix entries(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      entries(l, m) =
          directions.weight() * mie_disk_farfield(radius, center, k, directions[l], directions[m]);
    }
  }
  return FarFieldMatrix(directions, k, entries, "disk-series");
}

}  // namespace scatterlab
