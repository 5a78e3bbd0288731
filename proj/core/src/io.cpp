#include "scatterlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace scatterlab {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw std::runtime_error("malformed " + what + ": '" + token + "'");
  }
  return v;
}

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw std::runtime_error("malformed " + what + ": '" + token + "'");
  }
  return v;
}

// Splits "# <kind> v1 a=.. b=.. c=<rest of line>"; the last key swallows spaces.
struct Header {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;
};

Header parse_header(const std::string& line, const std::string& kind,
                    const std::vector<std::string>& keys) {
  const std::string prefix = "# " + kind + " v1 ";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("expected header '" + prefix + "...', got '" + line + "'");
  }
  Header h{kind, {}};
  std::string rest = line.substr(prefix.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string key = keys[i] + "=";
    if (rest.rfind(key, 0) != 0) {
      throw std::runtime_error("header field '" + keys[i] + "' missing in '" + line + "'");
    }
    rest = rest.substr(key.size());
    if (i + 1 == keys.size()) {
      h.fields.emplace_back(keys[i], rest);
    } else {
      const auto space = rest.find(' ');
      if (space == std::string::npos) {
        throw std::runtime_error("truncated header '" + line + "'");
      }
      h.fields.emplace_back(keys[i], rest.substr(0, space));
      rest = rest.substr(space + 1);
    }
  }
  return h;
}

}  // namespace

std::string format_farfield(const FarFieldMatrix& f) {
  std::string out = "# farfield v1 k=" + g17(f.wavenumber()) + " N=" + std::to_string(f.size()) +
                    " scene=" + f.scene() + "\n";
  for (int l = 0; l < f.size(); ++l) {
    for (int m = 0; m < f.size(); ++m) {
      const complex v = f.matrix()(l, m);
      out += std::to_string(l + 1) + ' ' + std::to_string(m + 1) + ' ' + g17(v.real()) + ' ' +
             g17(v.imag()) + '\n';
    }
  }
  return out;
}

FarFieldMatrix parse_farfield(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty far-field file");
  }
  const Header h = parse_header(line, "farfield", {"k", "N", "scene"});
  const double k = parse_double(h.fields[0].second, "wavenumber");
  const int n = parse_int(h.fields[1].second, "direction count");
  const DirectionSet dirs(n);
  ComplexMatrix entries(n, n);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      if (!std::getline(in, line)) {
        throw std::runtime_error("far-field file ends after " + std::to_string(l * n + m) + " rows");
      }
      std::istringstream row(line);
      std::string tl, tm, re, im, extra;
      if (!(row >> tl >> tm >> re >> im) || (row >> extra)) {
        throw std::runtime_error("malformed far-field row: '" + line + "'");
      }
      if (parse_int(tl, "row index") != l + 1 || parse_int(tm, "column index") != m + 1) {
        throw std::runtime_error("far-field rows out of order at '" + line + "'");
      }
      entries(l, m) = complex(parse_double(re, "real part"), parse_double(im, "imaginary part"));
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) {
      throw std::runtime_error("trailing data in far-field file");
    }
  }
  return FarFieldMatrix(dirs, Wavenumber(k), entries, h.fields[2].second);
}

void write_farfield(const FarFieldMatrix& f, const std::filesystem::path& path) {
  write_atomically(path, format_farfield(f));
}

FarFieldMatrix read_farfield(const std::filesystem::path& path) { return parse_farfield(read_text(path)); }

std::string format_field_csv(const IndicatorField& field) {
  const SamplingGrid& g = field.grid();
  std::string out = "# field v1 R=" + g17(g.half_width()) + " M=" + std::to_string(g.resolution()) +
                    " method=" + field.method() + "\n";
  const int m = g.resolution();
  for (int i = -m; i <= m; ++i) {
    for (int j = -m; j <= m; ++j) {
      if (j > -m) {
        out += ',';
      }
      out += g17(field.at(i, j));
    }
    out += '\n';
  }
  return out;
}

IndicatorField parse_field_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty field file");
  }
  const Header h = parse_header(line, "field", {"R", "M", "method"});
  const SamplingGrid grid(parse_double(h.fields[0].second, "R"), parse_int(h.fields[1].second, "M"));
  IndicatorField field(grid, h.fields[2].second);
  const int m = grid.resolution();
  for (int i = -m; i <= m; ++i) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("field file has too few rows");
    }
    std::istringstream row(line);
    std::string cell;
    int j = -m;
    while (std::getline(row, cell, ',')) {
      if (j > m) {
        throw std::runtime_error("field row has too many values");
      }
      field.at(i, j++) = parse_double(cell, "field value");
    }
    if (j != m + 1) {
      throw std::runtime_error("field row has too few values");
    }
  }
  return field;
}

void write_field_csv(const IndicatorField& field, const std::filesystem::path& path) {
  write_atomically(path, format_field_csv(field));
}

IndicatorField read_field_csv(const std::filesystem::path& path) {
  return parse_field_csv(read_text(path));
}

std::string format_pgm(const IndicatorField& field) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (double v : field.values()) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const int m = field.grid().resolution();
  const int side = field.grid().side();
  std::string out = "P2\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  for (int j = m; j >= -m; --j) {
    for (int i = -m; i <= m; ++i) {
      const double v = field.at(i, j);
      int gray = 255;
      if (std::isinf(v)) {
        gray = v > 0 ? 0 : 255;
      } else if (std::isfinite(v) && hi > lo) {
        gray = 255 - static_cast<int>(std::lround(255.0 * (v - lo) / (hi - lo)));
      }
      out += std::to_string(gray);
      out += (i == m) ? '\n' : ' ';
    }
  }
  return out;
}

void write_pgm(const IndicatorField& field, const std::filesystem::path& path) {
  write_atomically(path, format_pgm(field));
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace scatterlab
