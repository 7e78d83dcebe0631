#include "nlem/patch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlem {

Eigen::Index mirror_index(Eigen::Index i, Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("mirror_index needs a non-empty axis");
  if (n == 1) return 0;
  const Eigen::Index period = 2 * (n - 1);
  Eigen::Index m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - m;
}

namespace {

void check_odd_positive(int value, const char* what) {
  if (value < 1 || value % 2 == 0)
    throw std::invalid_argument(std::string(what) + " must be odd and positive");
}

}  // namespace

Eigen::VectorXd patch_at(const Image& image, Eigen::Index row, Eigen::Index col, int k) {
  check_odd_positive(k, "patch size");
  const Eigen::Index half = k / 2;
  Eigen::VectorXd patch(static_cast<Eigen::Index>(k) * k);
  Eigen::Index out = 0;
  for (Eigen::Index dr = -half; dr <= half; ++dr) {
    const Eigen::Index r = mirror_index(row + dr, image.rows());
    for (Eigen::Index dc = -half; dc <= half; ++dc)
      patch(out++) = image(r, mirror_index(col + dc, image.cols()));
  }
  return patch;
}

Eigen::MatrixXd build_patch_table(const Image& image, int k) {
  validate_image(image);
  check_odd_positive(k, "patch size");
  const Eigen::Index rows = image.rows();
  const Eigen::Index cols = image.cols();
  Eigen::MatrixXd table(static_cast<Eigen::Index>(k) * k, rows * cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      table.col(r * cols + c) = patch_at(image, r, c, k);
  return table;
}

Eigen::VectorXd patch_weights(const Eigen::MatrixXd& patches, Eigen::Index center, double h) {
  if (center < 0 || center >= patches.cols())
    throw std::invalid_argument("patch_weights center column out of range");
  if (!(h > 0.0)) throw std::invalid_argument("similarity bandwidth h must be positive");
  const double inv_h2 = 1.0 / (h * h);
  Eigen::VectorXd weights(patches.cols());
  for (Eigen::Index j = 0; j < patches.cols(); ++j)
    weights(j) = std::exp(-(patches.col(j) - patches.col(center)).squaredNorm() * inv_h2);
  return weights;
}

PatchStack build_patch_stack(const Eigen::MatrixXd& table, Eigen::Index rows,
                             Eigen::Index cols, Eigen::Index row, Eigen::Index col,
                             int search, double h) {
  check_odd_positive(search, "search window");
  if (rows < 1 || cols < 1 || table.cols() != rows * cols)
    throw std::invalid_argument("patch table does not match the image shape");
  if (row < 0 || row >= rows || col < 0 || col >= cols)
    throw std::invalid_argument("pixel outside the image");

  const Eigen::Index half = search / 2;
  const Eigen::Index r0 = std::max<Eigen::Index>(0, row - half);
  const Eigen::Index r1 = std::min<Eigen::Index>(rows - 1, row + half);
  const Eigen::Index c0 = std::max<Eigen::Index>(0, col - half);
  const Eigen::Index c1 = std::min<Eigen::Index>(cols - 1, col + half);

  PatchStack stack;
  stack.patches.resize(table.rows(), (r1 - r0 + 1) * (c1 - c0 + 1));
  Eigen::Index out = 0;
  for (Eigen::Index r = r0; r <= r1; ++r)
    for (Eigen::Index c = c0; c <= c1; ++c) {
      if (r == row && c == col) stack.self_column = out;
      stack.patches.col(out++) = table.col(r * cols + c);
    }
  stack.weights = patch_weights(stack.patches, stack.self_column, h);
  return stack;
}

PatchStack build_patch_stack(const Image& image, Eigen::Index row, Eigen::Index col,
                             int search, int k, double h) {
  validate_image(image);
  check_odd_positive(search, "search window");
  check_odd_positive(k, "patch size");
  if (row < 0 || row >= image.rows() || col < 0 || col >= image.cols())
    throw std::invalid_argument("pixel outside the image");

  const Eigen::Index half = search / 2;
  const Eigen::Index r0 = std::max<Eigen::Index>(0, row - half);
  const Eigen::Index r1 = std::min<Eigen::Index>(image.rows() - 1, row + half);
  const Eigen::Index c0 = std::max<Eigen::Index>(0, col - half);
  const Eigen::Index c1 = std::min<Eigen::Index>(image.cols() - 1, col + half);

  PatchStack stack;
  stack.patches.resize(static_cast<Eigen::Index>(k) * k, (r1 - r0 + 1) * (c1 - c0 + 1));
  Eigen::Index out = 0;
  for (Eigen::Index r = r0; r <= r1; ++r)
    for (Eigen::Index c = c0; c <= c1; ++c) {
      if (r == row && c == col) stack.self_column = out;
      stack.patches.col(out++) = patch_at(image, r, c, k);
    }
  stack.weights = patch_weights(stack.patches, stack.self_column, h);
  return stack;
}

}  // namespace nlem
