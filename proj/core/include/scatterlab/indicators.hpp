#pragma once

#include <string>
#include <vector>

#include "scatterlab/forward.hpp"
#include "scatterlab/geometry.hpp"
#include "scatterlab/operators.hpp"

namespace scatterlab {

/// Values on a (2M+1) x (2M+1) sampling grid, addressed by i, j in [-M, M].
class IndicatorField {
 public:
  IndicatorField(SamplingGrid grid, std::string method);

  const SamplingGrid& grid() const { return grid_; }
  const std::string& method() const { return method_; }

  double& at(int i, int j) { return values_[index(i, j)]; }
  double at(int i, int j) const { return values_[index(i, j)]; }
  const std::vector<double>& values() const { return values_; }

  double min() const;
  double max() const;

 private:
  std::size_t index(int i, int j) const;

  SamplingGrid grid_;
  std::string method_;
  std::vector<double> values_;
};

/// #neg(-Re F - Gram_square(z, r)).
IndicatorField mm_obstacle_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                                 double tol = kDefaultNegativeTol);

/// #neg(Re F - alpha Gram_square(z, r)).
IndicatorField mm_medium_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                               double alpha, double tol = kDefaultNegativeTol);

/// #neg(-Re F - Gram_segment(z, eta, r)).
IndicatorField mm_crack_field(const FarFieldMatrix& f, const SamplingGrid& grid, double eta,
                              double r, double tol = kDefaultNegativeTol);

/// Pointwise minimum of mm_crack_field over several angles.
IndicatorField mm_crack_field(const FarFieldMatrix& f, const SamplingGrid& grid,
                              const std::vector<double>& etas, double r,
                              double tol = kDefaultNegativeTol);

/// #neg(Re F + Gram_circle(z, r)).
IndicatorField mm_mixed_shifting_field(const FarFieldMatrix& f, const SamplingGrid& grid, double r,
                                       double tol = kDefaultNegativeTol);

/// #neg(Re F + Gram_circle(p, |z - p|)); the zero-radius circle contributes nothing.
IndicatorField mm_mixed_shrinking_field(const FarFieldMatrix& f, const SamplingGrid& grid,
                                        const Point& p, double tol = kDefaultNegativeTol);

/// Inverse Picard series of phi_z against |Re F| + |Im F|.
IndicatorField fm_field(const FarFieldMatrix& f, const SamplingGrid& grid,
                        double drop_tol = kDefaultDropTol);

}  // namespace scatterlab
