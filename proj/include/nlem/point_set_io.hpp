#ifndef NLEM_POINT_SET_IO_HPP
#define NLEM_POINT_SET_IO_HPP

#include <iosfwd>
#include <string>

#include "nlem/types.hpp"

namespace nlem {

/// Reads the text point-set format: a "n d" header line, then n lines of
/// d coordinates followed by one weight, whitespace-separated decimals.
/// Throws ParseError (with byte offset) on malformed input.
PointSetd read_point_set(std::istream& in);
PointSetd read_point_set_file(const std::string& path);

/// Writes the same format with full round-trip precision.
void write_point_set(std::ostream& out, const PointSetd& ps);
void write_point_set_file(const std::string& path, const PointSetd& ps);

}  // namespace nlem

#endif  // NLEM_POINT_SET_IO_HPP
