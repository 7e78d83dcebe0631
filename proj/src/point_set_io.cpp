#include "nlem/point_set_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nlem {

namespace {

// Whitespace-delimited token scanner that remembers where each token began.
class TokenScanner {
 public:
  explicit TokenScanner(const std::string& text) : text_(text) {}

  std::size_t offset() const { return pos_; }

  bool next_token(std::string& token, std::size_t& token_offset) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return false;
    token_offset = pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token.assign(text_, start, pos_ - start);
    return true;
  }

  long long expect_int(const char* what) {
    std::string token;
    std::size_t at = pos_;
    if (!next_token(token, at))
      throw ParseError(std::string("unexpected end of input, expected ") + what, at);
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end == token.c_str() || *end != '\0')
      throw ParseError(std::string("invalid integer for ") + what + ": '" + token + "'", at);
    return value;
  }

  double expect_double(const char* what) {
    std::string token;
    std::size_t at = pos_;
    if (!next_token(token, at))
      throw ParseError(std::string("unexpected end of input, expected ") + what, at);
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
      throw ParseError(std::string("invalid number for ") + what + ": '" + token + "'", at);
    return value;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

PointSetd read_point_set(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  TokenScanner scan(text);

  const long long n = scan.expect_int("point count n");
  const long long d = scan.expect_int("dimension d");
  if (n < 1) throw ParseError("point count must be at least 1", 0);
  if (d < 1) throw ParseError("dimension must be at least 1", 0);

  PointSetd ps;
  ps.points.resize(d, n);
  ps.weights.resize(n);
  for (long long k = 0; k < n; ++k) {
    for (long long i = 0; i < d; ++i) ps.points(i, k) = scan.expect_double("coordinate");
    ps.weights(k) = scan.expect_double("weight");
  }

  std::string extra;
  std::size_t at = 0;
  if (scan.next_token(extra, at)) throw ParseError("trailing data after last point", at);

  try {
    validate(ps);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return ps;
}

PointSetd read_point_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open point-set file: " + path, 0);
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSetd& ps) {
  char buf[40];
  out << ps.size() << ' ' << ps.dim() << '\n';
  for (Eigen::Index k = 0; k < ps.size(); ++k) {
    for (Eigen::Index i = 0; i < ps.dim(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", ps.points(i, k));
      out << buf << ' ';
    }
    std::snprintf(buf, sizeof buf, "%.17g", ps.weights(k));
    out << buf << '\n';
  }
}

void write_point_set_file(const std::string& path, const PointSetd& ps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_point_set(out, ps);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nlem
