#ifndef NLEM_PGM_HPP
#define NLEM_PGM_HPP

#include <string>
#include <string_view>

#include "nlem/image.hpp"

namespace nlem {

enum class PgmFormat { P2, P5 };

/// Parses a PGM file held in memory: P2 (ASCII) or P5 (binary, one byte per
/// sample up to maxval 255, two bytes big-endian above), '#' comments in the
/// header, maxval up to 65535. Malformed input raises ParseError with the
/// offending byte offset; trailing non-whitespace bytes count as malformed.
Image decode_pgm(std::string_view bytes);

/// Serializes an image as PGM with maxval 255. Intensities are rounded to the
/// nearest integer (ties away from zero) and clamped to [0, 255] first, so
/// decode(encode(img)) == clamp(round(img)) exactly.
std::string encode_pgm(const Image& image, PgmFormat format);

/// File wrappers. Filesystem trouble raises std::runtime_error; malformed
/// content raises ParseError.
Image read_pgm(const std::string& path);
void write_pgm(const Image& image, const std::string& path, PgmFormat format);

}  // namespace nlem

#endif  // NLEM_PGM_HPP
