#ifndef NLEM_PATCH_HPP
#define NLEM_PATCH_HPP

#include <Eigen/Dense>

#include "nlem/image.hpp"

namespace nlem {

/// Whole-sample mirror of an index into [0, n): ..., 2, 1, 0, 1, 2, ... on the
/// left edge and symmetric on the right, so the border sample itself is not
/// duplicated. n == 1 pins every query to 0.
Eigen::Index mirror_index(Eigen::Index i, Eigen::Index n);

/// The k x k window centered at (row, col), flattened row-major into a k^2
/// vector. Out-of-image coordinates are mirror-reflected, so every center is
/// valid. k must be odd and positive.
Eigen::VectorXd patch_at(const Image& image, Eigen::Index row, Eigen::Index col, int k);

/// Every patch of the image as a column: a k^2 x (rows * cols) matrix whose
/// column row * cols + col holds patch_at(image, row, col, k).
Eigen::MatrixXd build_patch_table(const Image& image, int k);

/// Gaussian similarity of each column of `patches` to the column `center`:
/// exp(-||P_j - P_center||^2 / h^2). The center's own weight is exactly 1.
/// h must be positive.
Eigen::VectorXd patch_weights(const Eigen::MatrixXd& patches, Eigen::Index center, double h);

/// One pixel's neighborhood for the non-local solvers: the patches whose
/// centers fall in the search window around the pixel (the window is clipped
/// at the image borders, so edge pixels see fewer neighbors), their
/// similarity weights, and where the pixel's own patch landed.
struct PatchStack {
  Eigen::MatrixXd patches;   // k^2 x n, one column per neighbor
  Eigen::VectorXd weights;   // n similarity weights, self weight 1
  Eigen::Index self_column = -1;
};

/// Assembles the stack for pixel (row, col) from a precomputed patch table of
/// the full image. `search` is the window side S (odd, positive); `h` the
/// similarity bandwidth.
PatchStack build_patch_stack(const Eigen::MatrixXd& table, Eigen::Index rows,
                             Eigen::Index cols, Eigen::Index row, Eigen::Index col,
                             int search, double h);

/// Same stack extracted straight from the image; avoids the full table when
/// only a few pixels are needed.
PatchStack build_patch_stack(const Image& image, Eigen::Index row, Eigen::Index col,
                             int search, int k, double h);

}  // namespace nlem

#endif  // NLEM_PATCH_HPP
