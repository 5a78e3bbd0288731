#pragma once

#include <Eigen/Core>

#include "scatterlab/specfun.hpp"

namespace scatterlab {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultNegativeTol = 1e-10;
inline constexpr double kDefaultDropTol = 1e-12;

/// Square complex matrix equal to its conjugate transpose. The constructor
/// replaces its argument by (A + A^H)/2, so roundoff asymmetry never leaks out.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& entries);

  static HermitianMatrix zero(int n);
  static HermitianMatrix identity(int n);

  int size() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  complex operator()(int i, int j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double scale) const;

 private:
  ComplexMatrix m_;
};

inline HermitianMatrix operator*(double scale, const HermitianMatrix& h) { return h * scale; }

/// Eigenvalues in descending order with orthonormal eigenvectors (columns).
struct EigenSystem {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

EigenSystem eigensystem(const HermitianMatrix& h);

/// Eigenvalues only, descending.
Eigen::VectorXd eigenvalues(const HermitianMatrix& h);

/// (A + A^H)/2. Throws std::invalid_argument for a non-square input.
HermitianMatrix hermitian_part(const ComplexMatrix& a);

/// (A - A^H)/(2i), so that A = hermitian_part(A) + i skew_part(A).
HermitianMatrix skew_part(const ComplexMatrix& a);

/// V |Lambda| V^H.
HermitianMatrix spectral_abs(const HermitianMatrix& h);

/// |Re A| + |Im A|.
HermitianMatrix factorization_operator(const ComplexMatrix& a);

/// Number of eigenvalues below -tol * s, where s is the largest eigenvalue
/// magnitude (floored at the smallest normal double).
int count_negative_eigs(const HermitianMatrix& h, double tol = kDefaultNegativeTol);
int count_negative_eigs(const Eigen::VectorXd& values, double tol = kDefaultNegativeTol);

/// count_negative_eigs(B - A, tol): how far A <= B fails.
int leq_fin_count(const HermitianMatrix& a, const HermitianMatrix& b,
                  double tol = kDefaultNegativeTol);

/// Inverse Picard series ( sum w |v_n^H phi|^2 / mu_n )^{-1} over eigenpairs with
/// mu_n > drop_tol * mu_max. The weight w turns the Euclidean product into the
/// quadrature inner product on the circle.
///
/// Returns +infinity when phi has no component on the retained eigenvectors
/// and 0 when the sum overflows. Throws std::runtime_error("operator
/// numerically zero") when nothing survives the drop threshold.
double picard_indicator(const EigenSystem& system, const ComplexVector& phi, double weight,
                        double drop_tol = kDefaultDropTol);

}  // namespace scatterlab
