#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "scatterlab/operators.hpp"
#include "scatterlab/probes.hpp"
#include "support/oracles.hpp"

using namespace scatterlab;

namespace {

ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = complex(g(rng), g(rng));
  return a;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  return Eigen::HouseholderQR<ComplexMatrix>(random_matrix(n, rng)).householderQ() * ComplexMatrix::Identity(n, n);
}

HermitianMatrix diag(std::initializer_list<double> values) {
  Eigen::VectorXd d(static_cast<int>(values.size()));
  int i = 0;
  for (double v : values) d[i++] = v;
  return HermitianMatrix(d.cast<complex>().asDiagonal().toDenseMatrix());
}

}  // namespace

TEST(HermitianMatrix, SymmetrizesAndValidates) {
  ComplexMatrix a(2, 2);
  a << 1.0, complex(2.0, 1.0), complex(2.0, 1.0 + 1e-14), 3.0;
  const HermitianMatrix h(a);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
  EXPECT_THROW(HermitianMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = complex(std::numeric_limits<double>::infinity(), 0.0);
  EXPECT_THROW(HermitianMatrix{bad}, std::invalid_argument);
}

TEST(HermitianPart, Examples) {
  std::mt19937_64 rng(1);
  const HermitianMatrix h(random_matrix(5, rng));
  EXPECT_LE((hermitian_part(h.matrix()).matrix() - h.matrix()).norm(), 1e-15 * h.matrix().norm());
  ComplexMatrix nil(2, 2);
  nil << 0.0, 1.0, 0.0, 0.0;
  ComplexMatrix expect(2, 2);
  expect << 0.0, 0.5, 0.5, 0.0;
  EXPECT_EQ(hermitian_part(nil).matrix(), expect);
  EXPECT_LE(hermitian_part(complex(0.0, 1.0) * h.matrix()).matrix().norm(), 1e-15 * h.matrix().norm());
  EXPECT_THROW(hermitian_part(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(SkewPart, Examples) {
  ComplexMatrix sym(2, 2);
  sym << 1.0, 2.0, 2.0, -3.0;
  EXPECT_EQ(skew_part(sym).matrix(), ComplexMatrix::Zero(2, 2));
  EXPECT_LE((skew_part(complex(0.0, 1.0) * ComplexMatrix::Identity(2, 2)).matrix() - ComplexMatrix::Identity(2, 2)).norm(),
            1e-16);
  EXPECT_THROW(skew_part(ComplexMatrix(3, 2)), std::invalid_argument);
}

TEST(SkewPart, ReconstructsMatrix) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2 + trial % 9, rng);
    const ComplexMatrix back = hermitian_part(a).matrix() + complex(0.0, 1.0) * skew_part(a).matrix();
    EXPECT_LE((a - back).norm(), 1e-14 * a.norm());
  }
}

TEST(EigenSystem, ReconstructionAndOrthonormality) {
  std::mt19937_64 rng(3);
  const HermitianMatrix h(random_matrix(12, rng));
  const EigenSystem es = eigensystem(h);
  for (int i = 1; i < es.values.size(); ++i) EXPECT_GE(es.values[i - 1], es.values[i]);
  const ComplexMatrix rebuilt = es.vectors * es.values.cast<complex>().asDiagonal() * es.vectors.adjoint();
  EXPECT_LE((rebuilt - h.matrix()).norm(), 1e-10 * h.matrix().norm());
  EXPECT_LE((es.vectors.adjoint() * es.vectors - ComplexMatrix::Identity(12, 12)).norm(), 1e-10);
}

TEST(SpectralAbs, Examples) {
  EXPECT_LE((spectral_abs(diag({-1.0, 2.0})).matrix() - diag({1.0, 2.0}).matrix()).norm(), 1e-15);
  std::mt19937_64 rng(4);
  const ComplexMatrix b = random_matrix(6, rng);
  const HermitianMatrix psd(b * b.adjoint());
  EXPECT_LE((spectral_abs(psd).matrix() - psd.matrix()).norm(), 1e-12 * psd.matrix().norm());
  const HermitianMatrix h(random_matrix(8, rng));
  const ComplexMatrix a = spectral_abs(h).matrix();
  const double scale = h.matrix().squaredNorm();
  EXPECT_LE((a * a - h.matrix() * h.matrix()).norm(), 1e-10 * scale);
  EXPECT_LE((a * h.matrix() - h.matrix() * a).norm(), 1e-10 * scale);
  EXPECT_GE(eigenvalues(spectral_abs(h)).minCoeff(), -1e-12 * h.matrix().norm());
}

TEST(CountNegativeEigs, Examples) {
  EXPECT_EQ(count_negative_eigs(diag({-1.0, -2.0, 3.0}), 0.0), 2);
  EXPECT_EQ(count_negative_eigs(HermitianMatrix::identity(5)), 0);
  EXPECT_EQ(count_negative_eigs(HermitianMatrix::zero(5)), 0);
  // Relative tolerance: tiny negative eigenvalues below tol * scale are ignored.
  EXPECT_EQ(count_negative_eigs(diag({1.0, -1e-12}), 1e-10), 0);
  EXPECT_EQ(count_negative_eigs(diag({1.0, -1e-12}), 0.0), 1);
}

TEST(CountNegativeEigs, MatchesSturmOracle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  std::bernoulli_distribution sign;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 19;
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = (sign(rng) ? -1.0 : 1.0) * u(rng);
    const ComplexMatrix q = random_unitary(n, rng);
    const HermitianMatrix h(q * lambda.cast<complex>().asDiagonal() * q.adjoint());
    EXPECT_EQ(count_negative_eigs(h, 0.0), oracle::SturmCounter(h.matrix()).below(0.0L)) << trial;
    EXPECT_EQ(count_negative_eigs(h, 0.0), (lambda.array() < 0.0).count());
  }
}

TEST(CountNegativeEigs, UnitaryInvariance) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 10;
    const HermitianMatrix h(random_matrix(n, rng));
    const ComplexMatrix u = random_unitary(n, rng);
    EXPECT_EQ(count_negative_eigs(h), count_negative_eigs(HermitianMatrix(u * h.matrix() * u.adjoint())));
  }
}

TEST(CountNegativeEigs, ScaleInvariance) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix h(random_matrix(7, rng));
    for (double c : {1e-8, 0.5, 3.0, 1e6}) {
      EXPECT_EQ(count_negative_eigs(h), count_negative_eigs(h * c));
    }
  }
}

TEST(LeqFinCount, Examples) {
  EXPECT_EQ(leq_fin_count(HermitianMatrix::zero(4), HermitianMatrix::identity(4)), 0);
  EXPECT_EQ(leq_fin_count(HermitianMatrix::identity(20), HermitianMatrix::zero(20)), 20);
  EXPECT_THROW(leq_fin_count(HermitianMatrix::identity(3), HermitianMatrix::identity(4)), std::invalid_argument);
}

TEST(LeqFinCount, GramRankFromSingularValues) {
  // A = H*H is PSD and rank deficient; A <= 0 fails exactly on its numerical rank.
  const DirectionSet dirs(20);
  for (double k : {1.0, 5.0}) {
    const HermitianMatrix gram = herglotz_gram_square(Point(0.2, -0.1), 0.3, Wavenumber(k), dirs);
    const Eigen::JacobiSVD<ComplexMatrix> svd(gram.matrix());
    const auto& s = svd.singularValues();
    const int rank = static_cast<int>((s.array() > 1e-10 * s[0]).count());
    EXPECT_LT(rank, 20);
    EXPECT_EQ(leq_fin_count(gram, HermitianMatrix::zero(20), 1e-10), rank);
  }
}

TEST(LeqFinCount, PartitionSanity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 8;
    const HermitianMatrix a(random_matrix(n, rng));
    const HermitianMatrix b(random_matrix(n, rng));
    const Eigen::VectorXd mu = eigenvalues(b - a);
    const int nonzero = static_cast<int>((mu.array() != 0.0).count());
    EXPECT_GE(leq_fin_count(a, b, 0.0) + leq_fin_count(b, a, 0.0), nonzero);
  }
}

TEST(PicardIndicator, IdentityOperator) {
  const EigenSystem es = eigensystem(HermitianMatrix::identity(20));
  const ComplexVector phi = test_vector_phi(Point(0.3, 0.1), Wavenumber(2.0), DirectionSet(20));
  EXPECT_NEAR(picard_indicator(es, phi, 2 * kPi / 20), 1.0 / (2 * kPi), 1e-14);
}

TEST(PicardIndicator, DiagonalExample) {
  const EigenSystem es = eigensystem(diag({4.0, 2.0, 1.0, 0.5}));
  ComplexVector e1 = ComplexVector::Zero(4);
  e1[0] = 1.0;
  // One-term series |<e1, e1>|^2 / 4 = 1/4, inverted.
  EXPECT_NEAR(picard_indicator(es, e1, 1.0), 4.0, 1e-14);
}

TEST(PicardIndicator, EmptySeriesAndZeroOperator) {
  const EigenSystem es = eigensystem(diag({1.0, 0.0}));
  ComplexVector phi = ComplexVector::Zero(2);
  phi[1] = 1.0;
  EXPECT_EQ(picard_indicator(es, phi, 1.0), std::numeric_limits<double>::infinity());
  try {
    picard_indicator(eigensystem(HermitianMatrix::zero(3)), ComplexVector::Ones(3), 1.0);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("operator numerically zero"), std::string::npos);
  }
}

TEST(FactorizationOperator, IsAbsReAndAbsIm) {
  std::mt19937_64 rng(9);
  const ComplexMatrix a = random_matrix(6, rng);
  const HermitianMatrix expect = spectral_abs(hermitian_part(a)) + spectral_abs(skew_part(a));
  EXPECT_LE((factorization_operator(a).matrix() - expect.matrix()).norm(), 1e-14 * a.norm());
}
