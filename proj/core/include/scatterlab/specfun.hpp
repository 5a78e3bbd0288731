#pragma once

#include <complex>

#include <Eigen/Core>

namespace scatterlab {

using complex = std::complex<double>;
using Point = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Positive wave number k (units 1/length).
class Wavenumber {
 public:
  explicit Wavenumber(double k);

  double value() const { return k_; }
  operator double() const { return k_; }

 private:
  double k_;
};

/// sin(t)/t with the removable singularity filled in.
double sinc(double t);

/// Bessel function of the first kind, order zero. Throws std::domain_error for t < 0.
double bessel_j0(double t);

/// Integer-order Bessel functions. Negative orders use J_{-n} = (-1)^n J_n.
/// bessel_j requires t >= 0, bessel_y requires t > 0.
double bessel_j(int order, double t);
double bessel_y(int order, double t);

/// H_n^(1)(t) = J_n(t) + i Y_n(t), t > 0.
complex hankel1(int order, double t);

/// H_0^(1)(t). Throws std::domain_error for t <= 0.
complex hankel0_first(double t);

/// Helmholtz fundamental solution in the plane, (i/4) H_0^(1)(k|x-y|).
/// Coincident points are rejected.
complex fundamental_solution(const Point& x, const Point& y, Wavenumber k);

/// Same as above but takes the distance directly (r > 0).
complex fundamental_solution(double r, Wavenumber k);

}  // namespace scatterlab
