#ifndef NLEM_PSNR_HPP
#define NLEM_PSNR_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nlem/image.hpp"

namespace nlem {

inline double mse(const Image& reference, const Image& test) {
  if (reference.rows() != test.rows() || reference.cols() != test.cols())
    throw std::invalid_argument("mse requires images of equal dimensions");
  return (reference - test).squaredNorm() / static_cast<double>(reference.size());
}

/// Peak signal-to-noise ratio in dB against the 8-bit peak of 255.
/// Identical images rate +infinity.
inline double psnr(const Image& reference, const Image& test) {
  const double err = mse(reference, test);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / err);
}

}  // namespace nlem

#endif  // NLEM_PSNR_HPP
