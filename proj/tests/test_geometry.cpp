#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "scatterlab/geometry.hpp"

using namespace scatterlab;

TEST(DirectionSet, Layout) {
  const DirectionSet four(4);
  EXPECT_NEAR(four[0].x(), 0.0, 1e-16);  // l = 1
  EXPECT_NEAR(four[0].y(), 1.0, 1e-16);
  EXPECT_EQ(four.antipode(0), 2);         // l = 3
  EXPECT_NEAR(four[2].y(), -1.0, 1e-16);

  const DirectionSet twenty(20);
  EXPECT_EQ(twenty.size(), 20);
  EXPECT_DOUBLE_EQ(twenty.weight(), 2.0 * kPi / 20.0);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(twenty[i].norm(), 1.0, 1e-14);
    EXPECT_LE((twenty[i] + twenty[twenty.antipode(i)]).norm(), 1e-14);
    const double angle = 2.0 * kPi * (i + 1) / 20.0;
    EXPECT_NEAR(twenty[i].x(), std::cos(angle), 1e-15);
    EXPECT_NEAR(twenty[i].y(), std::sin(angle), 1e-15);
  }
}

TEST(DirectionSet, RejectsOddOrTiny) {
  EXPECT_THROW(DirectionSet(0), std::invalid_argument);
  EXPECT_THROW(DirectionSet(1), std::invalid_argument);
  EXPECT_THROW(DirectionSet(7), std::invalid_argument);
}

TEST(SamplingGrid, Layout) {
  const SamplingGrid full(1.5, 100);
  EXPECT_EQ(full.point(100, 100), Point(1.5, 1.5));
  EXPECT_EQ(full.point(0, 0), Point(0.0, 0.0));
  EXPECT_EQ(full.side(), 201);
  const SamplingGrid small(1.5, 3);
  EXPECT_EQ(small.point_count(), 49u);
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      EXPECT_EQ(small.point(-i, -j), Point(-small.point(i, j)));
    }
  }
  EXPECT_THROW(SamplingGrid(0.0, 3), std::invalid_argument);
  EXPECT_THROW(SamplingGrid(1.0, 0), std::invalid_argument);
}

TEST(BuiltinShapes, Formulas) {
  const Curve omega1 = builtin_shape("omega1");
  ASSERT_EQ(omega1.size(), 1u);
  EXPECT_LE((omega1[0].position(0.0) - Point(0.7, 0.0)).norm(), 1e-15);
  EXPECT_LE((omega1[0].position(0.5) - Point(0.0, 0.7)).norm(), 1e-15);
  EXPECT_TRUE(omega1[0].closed());

  const Curve omega2 = builtin_shape("omega2");
  ASSERT_EQ(omega2.size(), 2u);
  EXPECT_LE((omega2[0].position(0.0) - Point(-0.4, 0.0)).norm(), 1e-15);
  EXPECT_LE((omega2[1].position(0.0) - Point(1.0, 0.0)).norm(), 1e-15);

  const Curve gamma1 = builtin_shape("gamma1");
  EXPECT_FALSE(gamma1[0].closed());
  EXPECT_LE((gamma1[0].position(1.0) - Point(std::cos(2.0), std::sin(2.0))).norm(), 1e-15);

  const Curve gamma2 = builtin_shape("gamma2");
  ASSERT_EQ(gamma2.size(), 2u);
  for (double s : {-1.0, -0.3, 0.0, 0.8}) {
    EXPECT_LE((gamma2[0].position(s) - Point(-0.4 * std::cos(2 * s) - 0.7, 0.4 * std::sin(2 * s))).norm(), 1e-15);
    EXPECT_LE((gamma2[1].position(s) - Point(0.4 * std::cos(2 * s) + 0.7, 0.4 * std::sin(2 * s))).norm(), 1e-15);
  }

  const Curve gamma3 = builtin_shape("gamma3");
  const Curve d3 = builtin_shape("dOmega3");
  EXPECT_LE((gamma3[0].position(0.0) - Point(0.5, 0.0)).norm(), 1e-15);
  EXPECT_FALSE(gamma3[0].closed());
  EXPECT_TRUE(d3[0].closed());
  for (double s = -1.0; s <= 1.0; s += 0.125) {
    EXPECT_NEAR(gamma3[0].position(s).norm(), 0.5, 1e-15);
    EXPECT_LE((d3[0].position(s * 2.0 / kPi) - gamma3[0].position(s)).norm(), 1e-15);
  }

  EXPECT_EQ(builtin_shape_names().size(), 6u);
  EXPECT_THROW(builtin_shape("omega9"), std::invalid_argument);
}

TEST(ParametrizedArc, DerivativesMatchFiniteDifferences) {
  for (const auto& name : builtin_shape_names()) {
    for (const auto& arc : builtin_shape(name)) {
      for (double s : {-0.9, -0.2, 0.4, 0.7}) {
        const double h = 1e-5;
        const Point d1 = (arc.position(s + h) - arc.position(s - h)) / (2 * h);
        const Point d2 = (arc.derivative(s + h) - arc.derivative(s - h)) / (2 * h);
        EXPECT_LE((d1 - arc.derivative(s)).norm(), 1e-8) << name;
        EXPECT_LE((d2 - arc.second_derivative(s)).norm(), 1e-7) << name;
        EXPECT_LE((arc.chord(s, 1e-3) - (arc.position(s + 1e-3) - arc.position(s))).norm(), 1e-14) << name;
      }
    }
  }
}

TEST(ParametrizedArc, Validation) {
  // Not periodic.
  EXPECT_THROW(ParametrizedArc([](double s) { return Point(s, 0.0); }, [](double) { return Point(1.0, 0.0); },
                               [](double) { return Point(0.0, 0.0); }, true),
               std::invalid_argument);
  // Degenerate derivative.
  EXPECT_THROW(ParametrizedArc([](double s) { return Point(s * s, 0.0); },
                               [](double s) { return Point(2 * s, 0.0); },
                               [](double) { return Point(2.0, 0.0); }, false),
               std::invalid_argument);
}

TEST(ParametrizedArc, LengthAndNormal) {
  for (double r : {0.25, 0.7, 1.3}) {
    const auto circle = ParametrizedArc::elliptic(Point(0.2, -0.1), r, r, kPi);
    EXPECT_NEAR(circle.length(256), 2 * kPi * r, 1e-10);
    // Outward for counter-clockwise curves.
    EXPECT_LE((circle.normal(0.0) - Point(1.0, 0.0)).norm(), 1e-15);
  }
  EXPECT_NEAR(builtin_shape("gamma1")[0].length(), 4.0, 1e-12);
}

TEST(ParseShape, InlineArcs) {
  const Curve c = parse_shape("arc:0,0,0.5,0.5,3.141592653589793;arc:1,1,0.2,0.3,1");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c[0].closed());
  EXPECT_FALSE(c[1].closed());
  EXPECT_LE((c[1].position(0.0) - Point(1.2, 1.0)).norm(), 1e-15);
  EXPECT_EQ(parse_shape("gamma3").size(), 1u);
  EXPECT_THROW(parse_shape("arc:0,0,1"), std::invalid_argument);
}

TEST(Probes, Validation) {
  EXPECT_NO_THROW(validate(SquareProbe{Point(0, 0), 0.1}));
  EXPECT_THROW(validate(SquareProbe{Point(0, 0), 0.0}), std::invalid_argument);
  EXPECT_THROW(validate(SegmentProbe{Point(0, 0), 4.0, 0.1}), std::invalid_argument);
  EXPECT_THROW(validate(SegmentProbe{Point(0, 0), 1.0, -0.1}), std::invalid_argument);
  EXPECT_NO_THROW(validate(SegmentProbe{Point(0, 0), kPi, 0.1}));
  EXPECT_THROW(validate(CircleProbe{Point(0, 0), 0.0}), std::invalid_argument);
}
