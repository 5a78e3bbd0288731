#include "scatterlab/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quadrature.hpp"

namespace scatterlab {

DirectionSet::DirectionSet(int count) {
  if (count < 2 || count % 2 != 0) {
    throw std::invalid_argument("direction count must be even and at least 2, got " +
                                std::to_string(count));
  }
  weight_ = 2.0 * kPi / count;
  directions_.reserve(count);
  for (int l = 1; l <= count; ++l) {
    const double angle = 2.0 * kPi * l / count;
    directions_.emplace_back(std::cos(angle), std::sin(angle));
  }
}

SamplingGrid::SamplingGrid(double half_width, int resolution)
    : half_width_(half_width), resolution_(resolution) {
  if (!(half_width > 0.0) || resolution < 1) {
    throw std::invalid_argument("sampling grid needs R > 0 and M >= 1");
  }
}

ParametrizedArc::ParametrizedArc(Map position, Map first_derivative, Map second_derivative,
                                 bool closed, Chord chord)
    : position_(std::move(position)),
      first_(std::move(first_derivative)),
      second_(std::move(second_derivative)),
      chord_(std::move(chord)),
      closed_(closed) {
  if (!position_ || !first_ || !second_) {
    throw std::invalid_argument("parametrized arc needs position and two derivatives");
  }
  for (int i = 0; i <= 64; ++i) {
    const double s = -1.0 + i / 32.0;
    if (!(first_(s).norm() > 1e-12)) {
      throw std::invalid_argument("parametrization is not regular at s = " + std::to_string(s));
    }
  }
  if (closed_) {
    const Point gap = position_(1.0) - position_(-1.0);
    const Point slope_gap = first_(1.0) - first_(-1.0);
    const double scale = std::max(1.0, position_(-1.0).norm());
    const double slope_scale = std::max(1.0, first_(-1.0).norm());
    if (gap.norm() > 1e-12 * scale || slope_gap.norm() > 1e-12 * slope_scale) {
      throw std::invalid_argument("closed arc does not match periodically at s = +-1");
    }
  }
}

ParametrizedArc ParametrizedArc::elliptic(const Point& center, double ax, double ay,
                                          double omega) {
  const bool closed = std::abs(std::abs(omega) - kPi) < 1e-14;
  return ParametrizedArc(
      [=](double s) { return Point(center.x() + ax * std::cos(omega * s), center.y() + ay * std::sin(omega * s)); },
      [=](double s) { return Point(-ax * omega * std::sin(omega * s), ay * omega * std::cos(omega * s)); },
      [=](double s) {
        return Point(-ax * omega * omega * std::cos(omega * s), -ay * omega * omega * std::sin(omega * s));
      },
      closed,
      [=](double s, double ds) {
        const double mid = omega * (s + 0.5 * ds);
        const double half = std::sin(0.5 * omega * ds);
        return Point(-2.0 * ax * std::sin(mid) * half, 2.0 * ay * std::cos(mid) * half);
      });
}

Point ParametrizedArc::chord(double s, double ds) const {
  if (chord_) {
    return chord_(s, ds);
  }
  return position_(s + ds) - position_(s);
}

Point ParametrizedArc::normal(double s) const {
  const Point d = first_(s);
  return Point(d.y(), -d.x()) / d.norm();
}

double ParametrizedArc::length(int nodes) const {
  double total = 0.0;
  if (closed_) {
    for (int j = 0; j < nodes; ++j) {
      total += first_(-1.0 + 2.0 * j / nodes).norm();
    }
    return total * 2.0 / nodes;
  }
  const auto rule = detail::gauss_legendre(nodes);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    total += rule.weights[j] * first_(rule.nodes[j]).norm();
  }
  return total;
}

Curve builtin_shape(std::string_view name) {
  using A = ParametrizedArc;
  const Point origin(0.0, 0.0);
  if (name == "omega1") {
    return {A::elliptic(origin, 0.7, 0.7, kPi)};
  }
  if (name == "omega2") {
    return {A::elliptic(Point(-0.7, 0.0), 0.3, 0.3, kPi), A::elliptic(Point(0.7, 0.0), 0.3, 0.3, kPi)};
  }
  if (name == "gamma1") {
    return {A::elliptic(origin, 1.0, 1.0, 2.0)};
  }
  if (name == "gamma2") {
    // The first arc carries a reflected cosine.
    return {A::elliptic(Point(-0.7, 0.0), -0.4, 0.4, 2.0), A::elliptic(Point(0.7, 0.0), 0.4, 0.4, 2.0)};
  }
  if (name == "gamma3") {
    return {A::elliptic(origin, 0.5, 0.5, 2.0)};
  }
  if (name == "dOmega3") {
    return {A::elliptic(origin, 0.5, 0.5, kPi)};
  }
  throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

std::vector<std::string> builtin_shape_names() {
  return {"omega1", "omega2", "gamma1", "gamma2", "gamma3", "dOmega3"};
}

Curve parse_shape(std::string_view text) {
  if (!text.starts_with("arc:")) {
    return builtin_shape(text);
  }
  Curve curve;
  std::stringstream pieces{std::string(text)};
  std::string piece;
  while (std::getline(pieces, piece, ';')) {
    if (!piece.starts_with("arc:")) {
      throw std::invalid_argument("inline shape pieces must start with 'arc:': " + piece);
    }
    std::stringstream fields(piece.substr(4));
    std::vector<double> values;
    std::string field;
    while (std::getline(fields, field, ',')) {
      values.push_back(std::stod(field));
    }
    if (values.size() != 5) {
      throw std::invalid_argument("inline arc needs cx,cy,ax,ay,omega: " + piece);
    }
    curve.push_back(ParametrizedArc::elliptic(Point(values[0], values[1]), values[2], values[3], values[4]));
  }
  return curve;
}

namespace {

struct ProbeValidator {
  void operator()(const SquareProbe& p) const {
    if (!(p.side > 0.0)) throw std::invalid_argument("square probe side must be positive");
  }
  void operator()(const SegmentProbe& p) const {
    if (!(p.length > 0.0)) throw std::invalid_argument("segment probe length must be positive");
    if (!(p.angle >= 0.0 && p.angle <= kPi)) {
      throw std::invalid_argument("segment probe angle must lie in [0, pi]");
    }
  }
  void operator()(const CircleProbe& p) const {
    if (!(p.radius > 0.0)) throw std::invalid_argument("circle probe radius must be positive");
  }
  void operator()(const CurveProbe&) const {}
};

}  // namespace

void validate(const ProbeShape& probe) { std::visit(ProbeValidator{}, probe); }

}  // namespace scatterlab
