#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scatterlab/forward.hpp"

namespace scatterlab::cli {

/// Exit status of `oracle` when the BIE/series discrepancy exceeds the threshold.
inline constexpr int kOracleFailure = 2;
inline constexpr double kOracleThreshold = 1e-6;

/// F + delta ||F||_F E / ||E||_F, E with independent standard normal real and
/// imaginary parts drawn from a seeded mt19937_64. delta = 0 returns F unchanged.
FarFieldMatrix add_noise(const FarFieldMatrix& f, double delta, std::uint64_t seed);

/// "x,y" -> point. Throws std::invalid_argument on malformed text.
Point parse_point(const std::string& text);
/// "re,im" -> complex.
complex parse_complex(const std::string& text);

/// Runs the command line `args` (args[0] is the program name). Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scatterlab::cli
