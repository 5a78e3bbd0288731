#pragma once

#include <filesystem>
#include <string>

#include "scatterlab/forward.hpp"
#include "scatterlab/indicators.hpp"

namespace scatterlab {

/// Text form of a far-field matrix:
///   # farfield v1 k=<k> N=<N> scene=<scene>
///   l m re im        (N^2 lines, 1-based, row-major in l, 17 significant digits)
std::string format_farfield(const FarFieldMatrix& f);
FarFieldMatrix parse_farfield(const std::string& text);

void write_farfield(const FarFieldMatrix& f, const std::filesystem::path& path);
FarFieldMatrix read_farfield(const std::filesystem::path& path);

/// CSV form of an indicator field:
///   # field v1 R=<R> M=<M> method=<method>
///   2M+1 rows, row i = -M..M, each holding the values for j = -M..M.
std::string format_field_csv(const IndicatorField& field);
IndicatorField parse_field_csv(const std::string& text);

void write_field_csv(const IndicatorField& field, const std::filesystem::path& path);
IndicatorField read_field_csv(const std::filesystem::path& path);

/// Plain (P2) grayscale image, field minimum white and maximum black. The top
/// image row is y = +R and the left column x = -R. Infinite values render black.
std::string format_pgm(const IndicatorField& field);
void write_pgm(const IndicatorField& field, const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

std::string read_text(const std::filesystem::path& path);

}  // namespace scatterlab
