#include "nlem/pgm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlem/types.hpp"

namespace nlem {

namespace {

// Header scanner: whitespace-separated tokens with '#' comments running to
// end of line. Offsets are byte positions into the original buffer.
class PgmScanner {
 public:
  explicit PgmScanner(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const unsigned char ch = static_cast<unsigned char>(bytes_[pos_]);
      if (std::isspace(ch)) {
        ++pos_;
      } else if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Nonnegative decimal integer; anything else is malformed.
  long expect_uint(const char* what, long max_value) {
    skip_separators();
    const std::size_t start = pos_;
    if (start >= bytes_.size())
      throw ParseError(std::string("missing ") + what, bytes_.size());
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > max_value)
        throw ParseError(std::string(what) + " out of range", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0)
      throw ParseError(std::string("malformed ") + what, start);
    return value;
  }

  // One raw byte (the single separator after the P5 maxval, or raster data).
  unsigned char take_byte(const char* what) {
    if (pos_ >= bytes_.size())
      throw ParseError(std::string("truncated ") + what, bytes_.size());
    return static_cast<unsigned char>(bytes_[pos_++]);
  }

  void expect_end() {
    skip_separators();
    if (pos_ < bytes_.size())
      throw ParseError("trailing data after pixel samples", pos_);
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image decode_pgm(std::string_view bytes) {
  PgmScanner scan(bytes);

  // The magic is the first two bytes; no leading whitespace allowed.
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw ParseError("not a P2/P5 PGM file", 0);
  const bool binary = bytes[1] == '5';
  scan.take_byte("magic");
  scan.take_byte("magic");

  const long width = scan.expect_uint("width", 1L << 30);
  const long height = scan.expect_uint("height", 1L << 30);
  if (width < 1) throw ParseError("width must be positive", scan.offset());
  if (height < 1) throw ParseError("height must be positive", scan.offset());
  const long maxval = scan.expect_uint("maxval", 65535);
  if (maxval < 1) throw ParseError("maxval must be positive", scan.offset());

  Image img(height, width);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    const unsigned char sep = scan.take_byte("raster");
    if (!std::isspace(sep))
      throw ParseError("missing separator before binary raster", scan.offset() - 1);
    const bool wide = maxval > 255;
    for (Eigen::Index r = 0; r < img.rows(); ++r)
      for (Eigen::Index c = 0; c < img.cols(); ++c) {
        const std::size_t at = scan.offset();
        long sample = scan.take_byte("raster");
        if (wide) sample = sample * 256 + scan.take_byte("raster");
        if (sample > maxval)
          throw ParseError("sample exceeds maxval", at);
        img(r, c) = static_cast<double>(sample);
      }
    // Tolerate a trailing newline some writers append, nothing else.
    scan.expect_end();
  } else {
    for (Eigen::Index r = 0; r < img.rows(); ++r)
      for (Eigen::Index c = 0; c < img.cols(); ++c) {
        // land on the token first so a range error points at the sample
        scan.skip_separators();
        const std::size_t at = scan.offset();
        const long sample = scan.expect_uint("sample", 65535);
        if (sample > maxval)
          throw ParseError("sample exceeds maxval", at);
        img(r, c) = static_cast<double>(sample);
      }
    scan.expect_end();
  }
  return img;
}

namespace {

int quantize(double value) {
  const double rounded = std::round(value);
  if (rounded < 0.0) return 0;
  if (rounded > 255.0) return 255;
  return static_cast<int>(rounded);
}

}  // namespace

std::string encode_pgm(const Image& image, PgmFormat format) {
  validate_image(image);
  std::string out;
  out.reserve(static_cast<std::size_t>(image.size()) * (format == PgmFormat::P2 ? 4 : 1) + 32);

  char header[64];
  std::snprintf(header, sizeof(header), "%s\n%ld %ld\n255\n",
                format == PgmFormat::P2 ? "P2" : "P5",
                static_cast<long>(image.cols()), static_cast<long>(image.rows()));
  out += header;

  if (format == PgmFormat::P5) {
    for (Eigen::Index r = 0; r < image.rows(); ++r)
      for (Eigen::Index c = 0; c < image.cols(); ++c)
        out.push_back(static_cast<char>(quantize(image(r, c))));
    return out;
  }

  // The plain format caps lines at 70 characters; 17 three-digit samples fit.
  int on_line = 0;
  char buf[8];
  for (Eigen::Index r = 0; r < image.rows(); ++r)
    for (Eigen::Index c = 0; c < image.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%d", quantize(image(r, c)));
      out += buf;
      if (++on_line == 17) {
        out.push_back('\n');
        on_line = 0;
      } else {
        out.push_back(' ');
      }
    }
  if (on_line != 0) out.push_back('\n');
  return out;
}

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("failed reading " + path);
  return decode_pgm(buffer.str());
}

void write_pgm(const Image& image, const std::string& path, PgmFormat format) {
  const std::string bytes = encode_pgm(image, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace nlem
