// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Usage: scatterlab_acceptance <path-to-scatterlab>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "scatterlab/forward.hpp"
#include "scatterlab/indicators.hpp"
#include "scatterlab/io.hpp"
#include "scatterlab/probes.hpp"
#include "support/gram_quadrature.hpp"

using namespace scatterlab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

char buffer[512];

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

double max_abs(const ComplexMatrix& a) { return a.cwiseAbs().maxCoeff(); }

double angle_of(const Point& p) { return std::atan2(p.y(), p.x()); }

// Minimum of a field over the grid points selected by `keep`.
double min_where(const IndicatorField& f, const std::function<bool(const Point&)>& keep) {
  double best = std::numeric_limits<double>::infinity();
  const int m = f.grid().resolution();
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      if (keep(f.grid().point(i, j))) best = std::min(best, f.at(i, j));
  return best;
}

double mean_where(const IndicatorField& f, const std::function<bool(const Point&)>& keep) {
  double sum = 0.0;
  int count = 0;
  const int m = f.grid().resolution();
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      if (keep(f.grid().point(i, j))) {
        sum += f.at(i, j);
        ++count;
      }
    }
  }
  return sum / count;
}

bool far_corner(const Point& z) { return z.cwiseAbs().maxCoeff() >= 1.2 - 1e-12; }

Outcome disk_oracle() {
  const DirectionSet dirs(20);
  double worst = 0.0, slowest = 0.0;
  for (const Point& c : {Point(0.0, 0.0), Point(0.3, 0.2)}) {
    for (double k : {1.0, 5.0}) {
      const auto start = Clock::now();
      const FarFieldMatrix bie = farfield_dirichlet_obstacle(
          {ParametrizedArc::elliptic(c, 0.7, 0.7, kPi)}, Wavenumber(k), dirs);
      slowest = std::max(slowest, seconds_since(start));
      double err = 0.0;
      for (int l = 0; l < 20; ++l) {
        for (int m = 0; m < 20; ++m) {
          const complex mie = oracle::mie_disk(0.7, c.x(), c.y(), k, angle_of(dirs[l]), angle_of(dirs[m]));
          err = std::max(err, std::abs(bie.pattern(l, m) - mie));
        }
      }
      worst = std::max(worst, err);
    }
  }
  return {worst <= 1e-6 && slowest < 5.0,
          format("max |BIE - series| = %.2e (tol 1e-6), slowest scene %.2f s (limit 5 s)", worst, slowest)};
}

Outcome reciprocity() {
  const DirectionSet dirs(20);
  const Wavenumber k(1.0);
  bool ok = true;
  std::string detail;
  auto record = [&](const std::string& label, double defect, double tol) {
    ok = ok && defect <= tol;
    detail += format("%s %.1e/%.0e; ", label.c_str(), defect, tol);
  };
  for (const std::string& name : builtin_shape_names()) {
    const Curve shape = builtin_shape(name);
    if (shape.front().closed()) {
      record("obstacle:" + name, farfield_dirichlet_obstacle(shape, k, dirs).reciprocity_defect(), 1e-8);
      record("medium:" + name, farfield_medium(MediumSpec{shape, 1.0, {}, 60}, k, dirs).reciprocity_defect(), 1e-4);
    } else {
      record("crack:" + name, farfield_dirichlet_crack(shape, k, dirs).reciprocity_defect(), 1e-6);
      record("mixed:" + name, farfield_mixed_crack(shape, k, dirs).reciprocity_defect(), 1e-4);
    }
  }
  return {ok, detail};
}

Outcome farfield_positivity() {
  double worst = std::numeric_limits<double>::infinity();
  for (double k : {1.0, 5.0}) {
    const FarFieldMatrix f = farfield_dirichlet_obstacle(builtin_shape("omega1"), Wavenumber(k), DirectionSet(20));
    const HermitianMatrix sharp = spectral_abs(hermitian_part(f.matrix())) + skew_part(f.matrix());
    worst = std::min(worst, eigenvalues(sharp).minCoeff() / f.matrix().norm());
  }
  return {worst >= -1e-8, format("min eigenvalue / ||F|| = %.2e (bound -1e-8)", worst)};
}

Outcome closed_form_grams() {
  const DirectionSet dirs(20);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pos(-1.5, 1.5), size(0.01, 0.5), angle(0.0, kPi), wave(0.5, 5.0);
  double square = 0.0, segment = 0.0, circle = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Point c(pos(rng), pos(rng));
    const double r = size(rng), eta = angle(rng), k = wave(rng);
    square = std::max(square, max_abs(herglotz_gram_square(c, r, Wavenumber(k), dirs).matrix() -
                                      oracle::gram_by_quadrature(dirs, k, oracle::square_nodes(c, r, 16))));
    segment = std::max(segment, max_abs(herglotz_gram_segment(c, eta, r, Wavenumber(k), dirs).matrix() -
                                        oracle::gram_by_quadrature(dirs, k, oracle::segment_nodes(c, eta, r, 16))));
    circle = std::max(circle, max_abs(herglotz_gram_circle(c, r, Wavenumber(k), dirs).matrix() -
                                      oracle::gram_by_quadrature(dirs, k, oracle::circle_nodes(c, r, 64))));
  }
  const double worst = std::max({square, segment, circle});
  return {worst <= 1e-10,
          format("50 tuples per family: square %.1e, segment %.1e, circle %.1e (tol 1e-10)", square, segment, circle)};
}

Outcome separation() {
  const DirectionSet dirs(20);
  bool ok = true;
  std::string detail;
  double slowest = 0.0;
  auto timed = [&](auto&& make) {
    const auto start = Clock::now();
    IndicatorField field = make();
    slowest = std::max(slowest, seconds_since(start));
    return field;
  };
  auto inside_disk = [](const Point& z) { return z.norm() <= 0.5 + 1e-12; };
  const SamplingGrid grid(1.5, 20);

  {
    const FarFieldMatrix f = farfield_dirichlet_obstacle(builtin_shape("omega1"), Wavenumber(5.0), dirs);
    const IndicatorField field = timed([&] { return mm_obstacle_field(f, grid, 0.1); });
    const double in = min_where(field, inside_disk), out = min_where(field, far_corner);
    ok = ok && in < out;
    detail += format("obstacle %g<%g; ", in, out);
  }
  {
    const FarFieldMatrix f = farfield_medium(MediumSpec{builtin_shape("omega1"), 1.0, {}, 60}, Wavenumber(1.0), dirs);
    const IndicatorField field = timed([&] { return mm_medium_field(f, grid, 0.1, 1.0); });
    const double in = min_where(field, inside_disk), out = min_where(field, far_corner);
    ok = ok && in < out;
    detail += format("medium %g<%g; ", in, out);
  }
  {
    // Distance to the arc (cos t, sin t), |t| <= 2.
    auto distance = [](const Point& z) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 20000; ++i) {
        const double t = -2.0 + 4.0 * i / 20000;
        best = std::min(best, (z - Point(std::cos(t), std::sin(t))).norm());
      }
      return best;
    };
    const FarFieldMatrix f = farfield_dirichlet_crack(builtin_shape("gamma1"), Wavenumber(5.0), dirs);
    bool any = false;
    for (double eta : {0.0, kPi / 2}) {
      const IndicatorField field = timed([&] { return mm_crack_field(f, grid, eta, 0.1); });
      const double in = min_where(field, [&](const Point& z) { return distance(z) < 0.05; });
      const double out = min_where(field, [&](const Point& z) { return distance(z) > 0.4; });
      any = any || in < out;
      detail += format("crack eta=%.2f %g<%g; ", eta, in, out);
    }
    ok = ok && any;
  }
  {
    // Spacing 0.05 puts (1.4, 1.4) and the radii 0.2 and 1.2 on grid points.
    const SamplingGrid fine(1.5, 30);
    const FarFieldMatrix f = farfield_mixed_crack(builtin_shape("gamma3"), Wavenumber(1.0), dirs);
    const IndicatorField shift = timed([&] { return mm_mixed_shifting_field(f, fine, 1.0); });
    const double centre = shift.at(0, 0), corner = shift.at(28, 28);
    const IndicatorField shrink = timed([&] { return mm_mixed_shrinking_field(f, fine, Point::Zero()); });
    const double big = shrink.at(24, 0), small = shrink.at(4, 0);
    ok = ok && centre <= corner && big <= small;
    detail += format("mixed shifting %g<=%g, shrinking %g<=%g; ", centre, corner, big, small);
  }
  ok = ok && slowest <= 60.0;
  detail += format("slowest field %.2f s (limit 60 s)", slowest);
  return {ok, detail};
}

Outcome factorization() {
  const FarFieldMatrix f = farfield_dirichlet_obstacle(builtin_shape("omega1"), Wavenumber(5.0), DirectionSet(20));
  const IndicatorField field = fm_field(f, SamplingGrid(1.5, 20));
  const double in = mean_where(field, [](const Point& z) { return z.norm() <= 0.6 + 1e-12; });
  const double out = mean_where(field, far_corner);
  return {in > 10.0 * out, format("inside mean %.3e, outside mean %.3e, ratio %.1f (need > 10)", in, out, in / out)};
}

Outcome eigenvalue_counts() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.1, 3.0);
  std::bernoulli_distribution sign;
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 19;
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = complex(g(rng), g(rng));
    const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(a).householderQ() * ComplexMatrix::Identity(n, n);
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = (sign(rng) ? -1.0 : 1.0) * u(rng);
    const HermitianMatrix h(q * lambda.cast<complex>().asDiagonal() * q.adjoint());
    if (count_negative_eigs(h, 0.0) != oracle::SturmCounter(h.matrix()).below(0.0L)) ++mismatches;
  }
  return {mismatches == 0, format("%d/200 mismatches against the Sturm count", mismatches)};
}

Outcome gram_nesting() {
  const DirectionSet dirs(20);
  int worst = 0;
  for (double k : {1.0, 5.0}) {
    for (const Point& c : {Point(0.0, 0.0), Point(0.6, -0.3), Point(-1.2, 1.0)}) {
      const HermitianMatrix diff = herglotz_gram_square(c, 0.5, Wavenumber(k), dirs) -
                                   herglotz_gram_square(c, 0.1, Wavenumber(k), dirs);
      worst = std::max(worst, count_negative_eigs(diff, 1e-10));
    }
  }
  return {worst == 0, format("max negative count %d (need 0)", worst)};
}

Outcome determinism(const std::string& exe) {
  const fs::path dir = fs::temp_directory_path() / "scatterlab_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto run_pipeline = [&](const std::string& tag) {
    const std::string ff = (dir / (tag + ".txt")).string();
    const std::string cmds[] = {
        "\"" + exe + "\" simulate --scene dirichlet-obstacle --shape omega1 -k 5 -N 20 --noise 0.01 --seed 3 -o \"" + ff + "\"",
        "\"" + exe + "\" reconstruct -f \"" + ff + "\" --method mm-square -M 20 -o \"" + (dir / (tag + "_mm")).string() + "\"",
        "\"" + exe + "\" reconstruct -f \"" + ff + "\" --method fm -M 20 -o \"" + (dir / (tag + "_fm")).string() + "\"",
    };
    for (const std::string& cmd : cmds)
      if (std::system(cmd.c_str()) != 0) return false;
    return true;
  };
  if (!run_pipeline("a") || !run_pipeline("b")) return {false, "pipeline command failed"};
  int compared = 0, differing = 0;
  for (const std::string& suffix : {".txt", "_mm.csv", "_mm.pgm", "_fm.csv", "_fm.pgm"}) {
    ++compared;
    if (read_text(dir / ("a" + suffix)) != read_text(dir / ("b" + suffix))) ++differing;
  }
  return {differing == 0, format("%d/%d output files differ between runs", differing, compared)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <scatterlab executable>\n", argv[0]);
    return 2;
  }
  const std::string exe = argv[1];
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"disk far field matches series", disk_oracle},
      {"reciprocity of every solver", reciprocity},
      {"F# positivity for the disk", farfield_positivity},
      {"closed-form probe Grams", closed_form_grams},
      {"monotonicity inside/outside separation", separation},
      {"factorization indicator contrast", factorization},
      {"negative eigenvalue counts", eigenvalue_counts},
      {"nested square Grams", gram_nesting},
      {"deterministic CLI outputs", [&] { return determinism(exe); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
