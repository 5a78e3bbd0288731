#pragma once

#include "scatterlab/geometry.hpp"
#include "scatterlab/operators.hpp"

namespace scatterlab {

// Herglotz Gram matrices H_B^* H_B discretised on a direction set. Entry (l, m)
// is (2 pi / N) int_B e^{i k y.(theta_m - x_l)} dy (area or arc length measure).

/// Square z + [-r/2, r/2]^2.
HermitianMatrix herglotz_gram_square(const Point& center, double side, Wavenumber k,
                                     const DirectionSet& directions);

/// Segment through `center` with direction (cos eta, sin eta) and length r.
HermitianMatrix herglotz_gram_segment(const Point& center, double eta, double length, Wavenumber k,
                                      const DirectionSet& directions);

/// Circle of radius r around `center` (arc-length measure).
HermitianMatrix herglotz_gram_circle(const Point& center, double radius, Wavenumber k,
                                     const DirectionSet& directions);

/// Any parametrized curve: trapezoid rule for closed curves, Gauss-Legendre for open arcs.
HermitianMatrix herglotz_gram_curve(const ParametrizedArc& curve, Wavenumber k,
                                    const DirectionSet& directions, int nodes = 256);

HermitianMatrix herglotz_gram(const ProbeShape& probe, Wavenumber k, const DirectionSet& directions);

/// phi_z(x_l) = e^{-i k x_l . z}. Also the diagonal of the translation
/// D(z) with Gram(z) = D(z) Gram(0) D(z)^H.
ComplexVector test_vector_phi(const Point& z, Wavenumber k, const DirectionSet& directions);

/// D Gram D^H for a diagonal D given as a vector.
HermitianMatrix translate_gram(const HermitianMatrix& gram, const ComplexVector& phases);

}  // namespace scatterlab
