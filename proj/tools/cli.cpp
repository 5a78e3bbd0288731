#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "scatterlab/indicators.hpp"
#include "scatterlab/io.hpp"
#include "scatterlab/probes.hpp"

namespace scatterlab::cli {

namespace {

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) {
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
  }
  return values;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool given_on_command_line(const CLI::Option* opt, const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) {
      if (opt->check_lname(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2))) {
        return true;
      }
    } else if (a.size() == 2 && a[0] == '-' && opt->check_sname(a.substr(1))) {
      return true;
    }
  }
  return false;
}

// Replaces "--config FILE" after the subcommand by the file's key=value pairs
// as long options. Options given explicitly on the command line win.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  if (args.size() < 2) {
    return args;
  }
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args[1]);
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  std::string file;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (file.empty()) {
    return args;
  }
  std::istringstream in(read_text(file));
  std::string line;
  std::vector<std::string> extra;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(file + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw std::invalid_argument(file + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
    if (given_on_command_line(opt, args)) {
      continue;
    }
    extra.push_back("--" + key);
    if (opt->get_expected_max() > 1) {
      std::istringstream words(value);
      std::string w;
      while (words >> w) {
        extra.push_back(w);
      }
    } else {
      extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

struct SimulateArgs {
  std::string scene;
  std::string shape;
  double k = 0.0;
  int directions = 20;
  int nodes = 128;
  int grading = 1;
  std::string faces = "mixed";
  int cells = 60;
  double contrast = 1.0;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

struct ReconstructArgs {
  std::string farfield;
  std::string method;
  std::string out_prefix;
  double half_width = 1.5;
  int resolution = 100;
  double probe_size = 0.1;
  std::vector<double> etas{0.0};
  double alpha = 1.0;
  std::string center = "0,0";
  std::string shift = "0,0";
  std::string shift_shape = "dOmega3";
  int shift_nodes = 256;
  double tol = kDefaultNegativeTol;
  double drop_tol = kDefaultDropTol;
};

struct OracleArgs {
  double radius = 0.7;
  std::string center = "0,0";
  double k = 0.0;
  int directions = 20;
  int nodes = 128;
};

struct RenderArgs {
  std::string field;
  std::string out;
};

FarFieldMatrix simulate(const SimulateArgs& a) {
  const Wavenumber k(a.k);
  const DirectionSet dirs(a.directions);
  const Curve shape = parse_shape(a.shape);
  auto require_closed = [&](bool closed) {
    for (const auto& arc : shape) {
      if (arc.closed() != closed) {
        throw std::invalid_argument("scene '" + a.scene + "' needs " + (closed ? "closed curves" : "open arcs") +
                                    ", shape '" + a.shape + "' does not fit");
      }
    }
  };
  FarFieldMatrix f = [&] {
    if (a.scene == "dirichlet-obstacle") {
      require_closed(true);
      return farfield_dirichlet_obstacle(shape, k, dirs, a.nodes);
    }
    if (a.scene == "dirichlet-crack") {
      require_closed(false);
      return farfield_dirichlet_crack(shape, k, dirs, a.nodes);
    }
    if (a.scene == "mixed-crack") {
      require_closed(false);
      MixedCrackOptions options;
      options.nodes = a.nodes;
      options.grading = a.grading;
      options.faces = a.faces == "dirichlet" ? MixedCrackOptions::Faces::dirichlet : MixedCrackOptions::Faces::mixed;
      return farfield_mixed_crack(shape, k, dirs, options);
    }
    require_closed(true);
    return farfield_medium(MediumSpec{shape, a.contrast, {}, a.cells}, k, dirs);
  }();
  std::string scene = f.scene() + ":" + a.shape;
  if (a.noise > 0.0) {
    f = add_noise(f, a.noise, a.seed);
    scene += " noise=" + g17(a.noise) + " seed=" + std::to_string(a.seed);
  }
  return f.with_scene(scene);
}

IndicatorField reconstruct(const ReconstructArgs& a, const FarFieldMatrix& f) {
  const SamplingGrid grid(a.half_width, a.resolution);
  const std::string& m = a.method;
  if (m == "mm-square") {
    return mm_obstacle_field(f, grid, a.probe_size, a.tol);
  }
  if (m == "mm-square-medium") {
    return mm_medium_field(f, grid, a.probe_size, a.alpha, a.tol);
  }
  if (m == "mm-segment") {
    return mm_crack_field(f, grid, a.etas, a.probe_size, a.tol);
  }
  if (m == "mm-circle-shift") {
    return mm_mixed_shifting_field(f, grid, a.probe_size, a.tol);
  }
  if (m == "mm-circle-shrink") {
    return mm_mixed_shrinking_field(f, grid, parse_point(a.center), a.tol);
  }
  const complex p = parse_complex(a.shift);
  if (p == complex(0.0, 0.0)) {
    return fm_field(f, grid, a.drop_tol);
  }
  HermitianMatrix gram = HermitianMatrix::zero(f.size());
  for (const auto& arc : parse_shape(a.shift_shape)) {
    gram = gram + herglotz_gram_curve(arc, f.wavenumber(), f.directions(), a.shift_nodes);
  }
  return fm_field(f.shifted(p, gram), grid, a.drop_tol);
}

}  // namespace

FarFieldMatrix add_noise(const FarFieldMatrix& f, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("noise level must be finite and non-negative");
  }
  if (delta == 0.0) {
    return f;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix e(f.size(), f.size());
  for (int l = 0; l < f.size(); ++l) {
    for (int m = 0; m < f.size(); ++m) {
      const double re = normal(rng);
      e(l, m) = complex(re, normal(rng));
    }
  }
  const ComplexMatrix noisy = f.matrix() + (delta * f.matrix().norm() / e.norm()) * e;
  return FarFieldMatrix(f.directions(), f.wavenumber(), noisy, f.scene());
}

Point parse_point(const std::string& text) {
  const auto v = split_numbers(text, 2, "point (expected x,y)");
  return Point(v[0], v[1]);
}

complex parse_complex(const std::string& text) {
  const auto v = split_numbers(text, 2, "complex number (expected re,im)");
  return complex(v[0], v[1]);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2D acoustic scattering: far-field synthesis and qualitative reconstruction", "scatterlab"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Synthesize a far-field matrix and write it to a file");
  std::string config_file;
  const char* config_help = "Read flat key=value options (long option names) from a file";
  simulate_cmd->add_option("--config", config_file, config_help);
  simulate_cmd->add_option("--scene", sim.scene, "Scatterer kind")
      ->required()
      ->check(CLI::IsMember({"dirichlet-obstacle", "dirichlet-crack", "mixed-crack", "medium"}));
  simulate_cmd->add_option("--shape", sim.shape, "Builtin shape name or arc:cx,cy,ax,ay,omega[;...]")->required();
  simulate_cmd->add_option("-k,--wavenumber", sim.k, "Wavenumber")->required()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("-N,--directions", sim.directions, "Number of directions (even)")->capture_default_str();
  simulate_cmd->add_option("--nodes", sim.nodes, "Boundary nodes per curve or arc")->capture_default_str();
  simulate_cmd->add_option("--grading", sim.grading, "Mixed crack edge grading (0 or 1)")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  simulate_cmd->add_option("--faces", sim.faces, "Mixed crack face conditions")
      ->check(CLI::IsMember({"mixed", "dirichlet"}))
      ->capture_default_str();
  simulate_cmd->add_option("--cells", sim.cells, "Medium grid cells across the support")->capture_default_str();
  simulate_cmd->add_option("--contrast", sim.contrast, "Medium contrast q")->capture_default_str();
  simulate_cmd->add_option("--noise", sim.noise, "Relative Frobenius noise level")->capture_default_str();
  simulate_cmd->add_option("--seed", sim.seed, "Noise generator seed")->capture_default_str();
  simulate_cmd->add_option("-o,--out", sim.out, "Output far-field file")->required();

  ReconstructArgs rec;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Evaluate an indicator field from a far-field file");
  reconstruct_cmd->add_option("--config", config_file, config_help);
  reconstruct_cmd->add_option("-f,--farfield", rec.farfield, "Input far-field file")->required();
  reconstruct_cmd->add_option("--method", rec.method, "Indicator")
      ->required()
      ->check(CLI::IsMember(
          {"mm-square", "mm-square-medium", "mm-segment", "mm-circle-shift", "mm-circle-shrink", "fm"}));
  reconstruct_cmd->add_option("-o,--out-prefix", rec.out_prefix, "Writes <prefix>.csv and <prefix>.pgm")
      ->required();
  reconstruct_cmd->add_option("-R,--half-width", rec.half_width, "Sampling square half-width")
      ->capture_default_str();
  reconstruct_cmd->add_option("-M,--resolution", rec.resolution, "Grid points per half-side")
      ->capture_default_str();
  reconstruct_cmd->add_option("-r,--probe-size", rec.probe_size, "Square side, segment length or circle radius")
      ->capture_default_str();
  reconstruct_cmd->add_option("--eta", rec.etas, "Segment angles in [0, pi]; the field is the pointwise minimum")
      ->capture_default_str();
  reconstruct_cmd->add_option("--alpha", rec.alpha, "Gram weight for mm-square-medium")->capture_default_str();
  reconstruct_cmd->add_option("--center", rec.center, "Shrinking circle centre x,y")->capture_default_str();
  reconstruct_cmd->add_option("--shift", rec.shift, "fm: complex p in F - p H*H over --shift-shape, as re,im")
      ->capture_default_str();
  reconstruct_cmd->add_option("--shift-shape", rec.shift_shape, "fm: curve carrying the auxiliary Herglotz term")
      ->capture_default_str();
  reconstruct_cmd->add_option("--shift-nodes", rec.shift_nodes, "fm: quadrature nodes on --shift-shape")
      ->capture_default_str();
  reconstruct_cmd->add_option("--tol", rec.tol, "Relative threshold for negative eigenvalues")
      ->capture_default_str();
  reconstruct_cmd->add_option("--drop-tol", rec.drop_tol, "Relative eigenvalue cut-off in the Picard series")
      ->capture_default_str();

  OracleArgs ora;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the disk BIE far field against the series solution");
  oracle_cmd->add_option("--config", config_file, config_help);
  oracle_cmd->add_option("--radius", ora.radius, "Disk radius")->capture_default_str();
  oracle_cmd->add_option("--center", ora.center, "Disk centre x,y")->capture_default_str();
  oracle_cmd->add_option("-k,--wavenumber", ora.k, "Wavenumber")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("-N,--directions", ora.directions, "Number of directions (even)")->capture_default_str();
  oracle_cmd->add_option("--nodes", ora.nodes, "Boundary nodes")->capture_default_str();

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Render a field CSV as a PGM heatmap");
  render_cmd->add_option("-i,--field", ren.field, "Input field CSV")->required();
  render_cmd->add_option("-o,--out", ren.out, "Output PGM")->required();

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(app, args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  if (!reversed.empty()) {
    reversed.pop_back();
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (simulate_cmd->parsed()) {
      const FarFieldMatrix f = simulate(sim);
      write_farfield(f, sim.out);
      out << "wrote " << sim.out << " (N=" << f.size() << ", k=" << g17(f.wavenumber())
          << ", scene=" << f.scene() << ")\n";
    } else if (reconstruct_cmd->parsed()) {
      const FarFieldMatrix f = read_farfield(rec.farfield);
      const IndicatorField field = reconstruct(rec, f);
      write_field_csv(field, rec.out_prefix + ".csv");
      write_pgm(field, rec.out_prefix + ".pgm");
      out << "wrote " << rec.out_prefix << ".csv and " << rec.out_prefix << ".pgm (" << field.method()
          << ", min " << g17(field.min()) << ", max " << g17(field.max()) << ")\n";
    } else if (oracle_cmd->parsed()) {
      const Wavenumber k(ora.k);
      const DirectionSet dirs(ora.directions);
      const Point c = parse_point(ora.center);
      const Curve disk{ParametrizedArc::elliptic(c, ora.radius, ora.radius, kPi)};
      const FarFieldMatrix bie = farfield_dirichlet_obstacle(disk, k, dirs, ora.nodes);
      const FarFieldMatrix series = mie_disk_matrix(ora.radius, c, k, dirs);
      const double error = (bie.matrix() - series.matrix()).cwiseAbs().maxCoeff() / dirs.weight();
      const bool ok = error <= kOracleThreshold;
      out << "max |BIE - series| = " << g17(error) << " (threshold " << kOracleThreshold << ") "
          << (ok ? "ok" : "exceeded") << "\n";
      return ok ? 0 : kOracleFailure;
    } else if (render_cmd->parsed()) {
      write_pgm(read_field_csv(ren.field), ren.out);
      out << "wrote " << ren.out << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace scatterlab::cli
