#ifndef NLEM_IMAGE_HPP
#define NLEM_IMAGE_HPP

#include <stdexcept>

#include <Eigen/Dense>

namespace nlem {

/// Grayscale raster of real-valued intensities. Row-major so that
/// data()[row * cols + col] matches the on-disk sample order.
using Image = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline void validate_image(const Image& img) {
  if (img.rows() < 1 || img.cols() < 1) throw std::invalid_argument("image must be non-empty");
  if (!img.allFinite()) throw std::invalid_argument("image intensities must be finite");
}

}  // namespace nlem

#endif  // NLEM_IMAGE_HPP
