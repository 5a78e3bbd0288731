#include <cmath>
#include <stdexcept>

#include "scatterlab/forward.hpp"

namespace scatterlab {

complex farfield_prefactor(Wavenumber k) {
  return std::polar(1.0 / std::sqrt(8.0 * kPi * k.value()), kPi / 4.0);
}

FarFieldMatrix::FarFieldMatrix(DirectionSet directions, Wavenumber k, ComplexMatrix entries,
                               std::string scene)
    : directions_(std::move(directions)), k_(k), entries_(std::move(entries)), scene_(std::move(scene)) {
  if (entries_.rows() != directions_.size() || entries_.cols() != directions_.size()) {
    throw std::invalid_argument("far-field matrix must be N x N for N directions");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("far-field matrix has non-finite entries");
  }
}

double FarFieldMatrix::reciprocity_defect() const {
  double worst = 0.0;
  for (int l = 0; l < size(); ++l) {
    for (int m = 0; m < size(); ++m) {
      const complex swapped = pattern(directions_.antipode(m), directions_.antipode(l));
      worst = std::max(worst, std::abs(pattern(l, m) - swapped));
    }
  }
  return worst;
}

FarFieldMatrix FarFieldMatrix::shifted(complex p, const HermitianMatrix& gram) const {
  if (gram.size() != size()) {
    throw std::invalid_argument("shift operator has the wrong dimension");
  }
  return FarFieldMatrix(directions_, k_, entries_ - p * gram.matrix(), scene_);
}

FarFieldMatrix FarFieldMatrix::with_scene(std::string scene) const {
  return FarFieldMatrix(directions_, k_, entries_, std::move(scene));
}

}  // namespace scatterlab
