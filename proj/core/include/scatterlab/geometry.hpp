#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scatterlab/specfun.hpp"

namespace scatterlab {

/// N equispaced unit directions x_l = (cos(2 pi l/N), sin(2 pi l/N)), l = 1..N,
/// with quadrature weight 2 pi / N. Stored 0-based: index i holds l = i + 1.
class DirectionSet {
 public:
  explicit DirectionSet(int count);

  int size() const { return static_cast<int>(directions_.size()); }
  double weight() const { return weight_; }
  const Point& operator[](int index) const { return directions_[index]; }
  const std::vector<Point>& directions() const { return directions_; }

  /// Index of the direction -x_i.
  int antipode(int index) const { return (index + size() / 2) % size(); }

 private:
  std::vector<Point> directions_;
  double weight_;
};

/// Sampling points z_{i,j} = (R i / M, R j / M), i, j in [-M, M].
class SamplingGrid {
 public:
  SamplingGrid(double half_width, int resolution);

  double half_width() const { return half_width_; }
  int resolution() const { return resolution_; }
  int side() const { return 2 * resolution_ + 1; }
  std::size_t point_count() const { return static_cast<std::size_t>(side()) * side(); }

  Point point(int i, int j) const {
    return {half_width_ * i / resolution_, half_width_ * j / resolution_};
  }

 private:
  double half_width_;
  int resolution_;
};

/// Regular curve s -> x(s) on [-1, 1] with first and second derivatives.
///
/// The optional chord callback returns x(s + ds) - x(s) without the
/// cancellation of a plain subtraction; the singular quadratures evaluate
/// kernels between nodes that can be extremely close near arc endpoints.
class ParametrizedArc {
 public:
  using Map = std::function<Point(double)>;
  using Chord = std::function<Point(double, double)>;

  ParametrizedArc(Map position, Map first_derivative, Map second_derivative, bool closed,
                  Chord chord = {});

  /// center + (ax cos(omega s), ay sin(omega s)). Closed when |omega| = pi.
  static ParametrizedArc elliptic(const Point& center, double ax, double ay, double omega);

  Point position(double s) const { return position_(s); }
  Point derivative(double s) const { return first_(s); }
  Point second_derivative(double s) const { return second_(s); }
  Point chord(double s, double ds) const;
  bool closed() const { return closed_; }

  /// Unit normal (x2', -x1') / |x'|; outward for counter-clockwise closed curves.
  Point normal(double s) const;

  /// Arc length by Gauss-Legendre (open) or trapezoid (closed) quadrature.
  double length(int nodes = 256) const;

 private:
  Map position_;
  Map first_;
  Map second_;
  Chord chord_;
  bool closed_;
};

/// A scatterer or probe boundary made of one or more arcs.
using Curve = std::vector<ParametrizedArc>;

/// Shapes used throughout the reconstructions: omega1, omega2, gamma1, gamma2,
/// gamma3, dOmega3. Throws std::invalid_argument for unknown names.
Curve builtin_shape(std::string_view name);
std::vector<std::string> builtin_shape_names();

/// Parses a builtin name or an inline "arc:cx,cy,ax,ay,omega" description
/// (several arcs separated by ';').
Curve parse_shape(std::string_view text);

struct SquareProbe {
  Point center;
  double side;
};

/// Segment through `center` at angle `angle` in [0, pi] with total length `length`.
struct SegmentProbe {
  Point center;
  double angle;
  double length;
};

struct CircleProbe {
  Point center;
  double radius;
};

struct CurveProbe {
  ParametrizedArc arc;
};

using ProbeShape = std::variant<SquareProbe, SegmentProbe, CircleProbe, CurveProbe>;

/// Throws std::invalid_argument when r <= 0 or the angle is outside [0, pi].
void validate(const ProbeShape& probe);

}  // namespace scatterlab
