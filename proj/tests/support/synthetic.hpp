#ifndef NLEM_TESTS_SUPPORT_SYNTHETIC_HPP
#define NLEM_TESTS_SUPPORT_SYNTHETIC_HPP

// Deterministic fixtures shared by the unit tests and the acceptance runner:
// closed-form synthetic images, a tiny CSV splitter, scratch directories, and
// a process runner for exercising the CLI binary.

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "nlem/image.hpp"

namespace testsupport {

/// Piecewise-flat scene with sky, roof, walls, windows and a door; intensity
/// range roughly [45, 185] so sigma <= 40 noise keeps patch medians well
/// inside [0, 255].
inline nlem::Image house_like(Eigen::Index n) {
  nlem::Image img(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double y = static_cast<double>(r) / static_cast<double>(n - 1);
      const double x = static_cast<double>(c) / static_cast<double>(n - 1);

      double v = 185.0 - 20.0 * y;  // sky
      if (y > 0.95) v = 100.0;      // ground
      const bool roof =
          y >= 0.18 && y <= 0.45 && std::abs(x - 0.5) <= (y - 0.18) / 0.27 * 0.375;
      const bool chimney = x >= 0.66 && x <= 0.72 && y >= 0.06 && y <= 0.30 && !roof;
      if (chimney) v = 95.0;
      if (roof) v = 70.0;
      if (y > 0.45 && y <= 0.95 && x >= 0.2 && x <= 0.85) {
        v = x > 0.62 ? 120.0 : 155.0;  // lit and shadowed walls
        if (y >= 0.55 && y <= 0.70 &&
            ((x >= 0.28 && x <= 0.40) || (x >= 0.66 && x <= 0.78)))
          v = 45.0;  // windows
        if (y >= 0.72 && x >= 0.47 && x <= 0.57) v = 90.0;  // door
      }
      img(r, c) = v;
    }
  }
  return img;
}

/// Texture-rich scene: oriented stripes at two frequencies, a smooth ramp and
/// a fine checkerboard, separated by sharp quadrant edges. Intensities stay
/// within [40, 216].
inline nlem::Image texture_rich(Eigen::Index n) {
  nlem::Image img(n, n);
  const double pi = 3.14159265358979323846;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double y = static_cast<double>(r) / static_cast<double>(n - 1);
      const double x = static_cast<double>(c) / static_cast<double>(n - 1);
      double v = 0.0;
      if (y < 0.5 && x < 0.5) {
        v = 128.0 + 72.0 * std::sin(2.0 * pi * 9.0 * (x + y));  // diagonal stripes
      } else if (y < 0.5) {
        v = 128.0 + 72.0 * std::sin(2.0 * pi * 16.0 * x);  // vertical stripes
      } else if (x < 0.5) {
        v = 60.0 + 150.0 * (x + (y - 0.5)) ;  // smooth ramp
      } else {
        const bool a = (static_cast<int>(x * 16.0) + static_cast<int>(y * 16.0)) % 2 == 0;
        v = a ? 88.0 : 168.0;  // coarse checkerboard
        v += 18.0 * std::sin(2.0 * pi * 20.0 * y);
      }
      img(r, c) = v;
    }
  }
  return img;
}

/// Splits CSV text into a header line and numeric rows; an empty field
/// becomes NaN. Written independently of the library's CSV writer so it can
/// serve as the round-trip oracle.
struct ParsedCsv {
  std::string header;
  std::vector<std::vector<double>> rows;
};

inline ParsedCsv parse_numeric_csv(const std::string& text) {
  ParsedCsv parsed;
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line)) throw std::runtime_error("empty CSV");
  parsed.header = line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      const std::string field = line.substr(start, comma - start);
      if (field.empty()) {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      } else {
        row.push_back(std::strtod(field.c_str(), nullptr));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    parsed.rows.push_back(std::move(row));
  }
  return parsed;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

/// Fresh scratch directory under the system temp root.
inline std::string scratch_dir(const char* tag) {
  std::string tmpl = std::string("/tmp/nlem_") + tag + "_XXXXXX";
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
  return std::string(buf.data());
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, captures stdout+stderr, returns the exit code.
inline CliResult run_command(const std::string& command) {
  CliResult result;
  const std::string sink = scratch_dir("cli_out") + "/out.txt";
  const int status = std::system((command + " > " + sink + " 2>&1").c_str());
  result.out = slurp(sink);
  if (status == -1)
    result.exit_code = -1;
  else if (WIFEXITED(status))
    result.exit_code = WEXITSTATUS(status);
  else
    result.exit_code = 128;
  return result;
}

}  // namespace testsupport

#endif  // NLEM_TESTS_SUPPORT_SYNTHETIC_HPP
