#pragma once

#include <functional>
#include <string>

#include "scatterlab/geometry.hpp"
#include "scatterlab/operators.hpp"

namespace scatterlab {

/// e^{i pi/4} / sqrt(8 pi k): Phi(x, y) ~ e^{ik|x|}/sqrt(|x|) * this * e^{-ik xhat.y}.
complex farfield_prefactor(Wavenumber k);

/// Discrete far-field operator: entry (l, m) = (2 pi / N) u_inf(x_l, theta_m),
/// with the same direction set used for observations and incidences.
class FarFieldMatrix {
 public:
  FarFieldMatrix(DirectionSet directions, Wavenumber k, ComplexMatrix entries, std::string scene);

  const DirectionSet& directions() const { return directions_; }
  Wavenumber wavenumber() const { return k_; }
  const ComplexMatrix& matrix() const { return entries_; }
  const std::string& scene() const { return scene_; }
  int size() const { return directions_.size(); }

  /// u_inf(x_l, theta_m), i.e. the entry without the quadrature weight.
  complex pattern(int l, int m) const { return entries_(l, m) / directions_.weight(); }

  /// max |u_inf(x_l, theta_m) - u_inf(-theta_m, -x_l)|.
  double reciprocity_defect() const;

  /// F - p G, used to attach an auxiliary Herglotz term before factorization tests.
  FarFieldMatrix shifted(complex p, const HermitianMatrix& gram) const;

  FarFieldMatrix with_scene(std::string scene) const;

 private:
  DirectionSet directions_;
  Wavenumber k_;
  ComplexMatrix entries_;
  std::string scene_;
};

/// Sound-soft obstacle bounded by one or more closed curves. Solves the
/// first-kind single-layer equation with a log-split Nystrom rule.
/// `nodes` is the count per curve (even, >= 4; 128 converges for k <= 5).
FarFieldMatrix farfield_dirichlet_obstacle(const Curve& boundary, Wavenumber k,
                                           const DirectionSet& directions, int nodes = 128);

/// Sound-soft crack made of one or more open arcs, cosine-substituted so the
/// edge singularity of the density is absorbed. `nodes` per arc.
FarFieldMatrix farfield_dirichlet_crack(const Curve& arcs, Wavenumber k,
                                        const DirectionSet& directions, int nodes = 128);

struct MixedCrackOptions {
  enum class Faces { mixed, dirichlet };
  int nodes = 128;
  /// 0: cosine substitution. 1: additional sine grading that resolves the
  /// quarter-power edge behaviour of the mixed problem.
  int grading = 1;
  /// mixed: u = 0 on the minus side, du/dnu = 0 on the plus side.
  /// dirichlet: u = 0 on both sides (reduces to the sound-soft crack).
  Faces faces = Faces::mixed;
};

/// Crack with a Dirichlet face (minus side) and a Neumann face (plus side,
/// where nu = (x_2', -x_1')/|x'| points). Combined single/double layer ansatz.
FarFieldMatrix farfield_mixed_crack(const Curve& arcs, Wavenumber k,
                                    const DirectionSet& directions,
                                    const MixedCrackOptions& options = {});

/// Penetrable medium with refractive contrast q supported inside closed curves.
struct MediumSpec {
  Curve support;
  double contrast = 1.0;
  /// Optional q(x); overrides `contrast` when set.
  std::function<double(const Point&)> profile;
  /// Cells across the longer side of the support's bounding box.
  int cells = 60;
};

/// Lippmann-Schwinger collocation on a uniform cell grid clipped to the support.
FarFieldMatrix farfield_medium(const MediumSpec& spec, Wavenumber k, const DirectionSet& directions);

/// Separation-of-variables far field of a sound-soft disk.
complex mie_disk_farfield(double radius, const Point& center, Wavenumber k, const Point& xhat,
                          const Point& theta);

FarFieldMatrix mie_disk_matrix(double radius, const Point& center, Wavenumber k,
                               const DirectionSet& directions);

}  // namespace scatterlab
