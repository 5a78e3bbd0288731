#include "scatterlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace scatterlab {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
}

void require_same_size(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& entries) {
  require_square(entries, "HermitianMatrix");
  if (!entries.allFinite()) {
    throw std::invalid_argument("HermitianMatrix: non-finite entries");
  }
  m_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::zero(int n) { return HermitianMatrix(ComplexMatrix::Zero(n, n)); }

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  require_same_size(*this, other);
  HermitianMatrix out;
  out.m_ = m_ + other.m_;
  return out;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  require_same_size(*this, other);
  HermitianMatrix out;
  out.m_ = m_ - other.m_;
  return out;
}

HermitianMatrix HermitianMatrix::operator-() const {
  HermitianMatrix out;
  out.m_ = -m_;
  return out;
}

HermitianMatrix HermitianMatrix::operator*(double scale) const {
  HermitianMatrix out;
  out.m_ = scale * m_;
  return out;
}

EigenSystem eigensystem(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  // Eigen sorts ascending; flip to descending.
  EigenSystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Eigen::VectorXd eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  return solver.eigenvalues().reverse();
}

HermitianMatrix hermitian_part(const ComplexMatrix& a) {
  require_square(a, "hermitian_part");
  return HermitianMatrix(a);
}

HermitianMatrix skew_part(const ComplexMatrix& a) {
  require_square(a, "skew_part");
  return HermitianMatrix(complex(0.0, -1.0) * a);
}

HermitianMatrix spectral_abs(const HermitianMatrix& h) {
  const EigenSystem sys = eigensystem(h);
  const Eigen::VectorXd mags = sys.values.cwiseAbs();
  return HermitianMatrix(sys.vectors * mags.asDiagonal() * sys.vectors.adjoint());
}

HermitianMatrix factorization_operator(const ComplexMatrix& a) {
  return spectral_abs(hermitian_part(a)) + spectral_abs(skew_part(a));
}

int count_negative_eigs(const Eigen::VectorXd& values, double tol) {
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("count_negative_eigs: tolerance must be non-negative");
  }
  if (values.size() == 0) {
    return 0;
  }
  const double scale =
      std::max({values.maxCoeff(), -values.minCoeff(), std::numeric_limits<double>::min()});
  const double threshold = -tol * scale;
  return static_cast<int>((values.array() < threshold).count());
}

int count_negative_eigs(const HermitianMatrix& h, double tol) {
  return count_negative_eigs(eigenvalues(h), tol);
}

int leq_fin_count(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  return count_negative_eigs(b - a, tol);
}

double picard_indicator(const EigenSystem& system, const ComplexVector& phi, double weight,
                        double drop_tol) {
  if (phi.size() != system.vectors.rows()) {
    throw std::invalid_argument("picard_indicator: test vector has the wrong dimension");
  }
  const double top = system.values.size() > 0 ? system.values.maxCoeff() : 0.0;
  if (!(top > 0.0)) {
    throw std::runtime_error("operator numerically zero");
  }
  const double cutoff = drop_tol * top;
  const ComplexVector coefficients = system.vectors.adjoint() * phi;
  double series = 0.0;
  int retained = 0;
  for (Eigen::Index n = 0; n < system.values.size(); ++n) {
    if (system.values[n] > cutoff) {
      series += weight * std::norm(coefficients[n]) / system.values[n];
      ++retained;
    }
  }
  if (retained == 0) {
    throw std::runtime_error("operator numerically zero");
  }
  if (!std::isfinite(series)) {
    return 0.0;
  }
  if (series == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / series;
}

}  // namespace scatterlab
