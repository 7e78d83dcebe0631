#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include <doctest.h>

#include "nlem/patch.hpp"

namespace {

// independent reflect oracle: fold the index back into range one bounce at a
// time instead of using modular arithmetic
Eigen::Index fold_index(Eigen::Index i, Eigen::Index n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

nlem::Image random_image(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_real_distribution<double> intensity(0.0, 255.0);
  nlem::Image img(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) img(r, c) = intensity(rng);
  return img;
}

}  // namespace

TEST_CASE("mirror_index agrees with a step-by-step fold") {
  for (Eigen::Index n : {Eigen::Index(1), Eigen::Index(2), Eigen::Index(3), Eigen::Index(5),
                         Eigen::Index(8)}) {
    for (Eigen::Index i = -25; i <= 25; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(nlem::mirror_index(i, n) == fold_index(i, n));
    }
  }
}

TEST_CASE("mirror_index does not duplicate the border sample") {
  // whole-sample reflection around index 0: -1 -> 1, -2 -> 2
  CHECK(nlem::mirror_index(-1, 5) == 1);
  CHECK(nlem::mirror_index(-2, 5) == 2);
  CHECK(nlem::mirror_index(5, 5) == 3);
  CHECK(nlem::mirror_index(6, 5) == 2);
}

TEST_CASE("corner patch of a 2x2 image reflects as documented") {
  nlem::Image img(2, 2);
  img << 1, 2, 3, 4;
  const Eigen::VectorXd p = nlem::patch_at(img, 0, 0, 3);
  Eigen::VectorXd expected(9);
  expected << 4, 3, 4, 2, 1, 2, 4, 3, 4;
  CHECK((p.array() == expected.array()).all());
}

TEST_CASE("interior patches copy the image verbatim") {
  nlem::Image img(9, 11);
  for (Eigen::Index r = 0; r < img.rows(); ++r)
    for (Eigen::Index c = 0; c < img.cols(); ++c) img(r, c) = 3.0 * r + 7.0 * c;

  const int k = 3;
  const Eigen::VectorXd p = nlem::patch_at(img, 4, 5, k);
  Eigen::Index idx = 0;
  for (Eigen::Index dr = -1; dr <= 1; ++dr)
    for (Eigen::Index dc = -1; dc <= 1; ++dc, ++idx)
      CHECK(p(idx) == 3.0 * (4 + dr) + 7.0 * (5 + dc));
}

TEST_CASE("patches of a constant image are constant") {
  const nlem::Image img = nlem::Image::Constant(6, 7, 42.0);
  const Eigen::VectorXd p = nlem::patch_at(img, 0, 6, 5);
  CHECK((p.array() == 42.0).all());
}

TEST_CASE("patch_at validates the patch side") {
  const nlem::Image img = nlem::Image::Constant(4, 4, 0.0);
  CHECK_THROWS_AS(nlem::patch_at(img, 0, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(nlem::patch_at(img, 0, 0, -3), std::invalid_argument);
  CHECK_THROWS_AS(nlem::patch_at(img, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("patch table column r*cols+c equals patch_at(r, c)") {
  std::mt19937_64 rng(81);
  const nlem::Image img = random_image(rng, 7, 9);
  const int k = 5;
  const Eigen::MatrixXd table = nlem::build_patch_table(img, k);
  REQUIRE(table.rows() == k * k);
  REQUIRE(table.cols() == img.rows() * img.cols());

  for (Eigen::Index r = 0; r < img.rows(); ++r) {
    for (Eigen::Index c = 0; c < img.cols(); ++c) {
      const Eigen::VectorXd direct = nlem::patch_at(img, r, c, k);
      CHECK((table.col(r * img.cols() + c).array() == direct.array()).all());
    }
  }
}

TEST_CASE("similarity weights follow the gaussian kernel") {
  SUBCASE("self weight is exactly one") {
    std::mt19937_64 rng(82);
    const nlem::Image img = random_image(rng, 6, 6);
    const Eigen::MatrixXd table = nlem::build_patch_table(img, 3);
    const Eigen::VectorXd w = nlem::patch_weights(table, 17, 10.0);
    CHECK(w(17) == 1.0);
    // distant patches may underflow to an exact zero weight
    CHECK((w.array() >= 0.0).all());
    CHECK((w.array() <= 1.0).all());
  }

  SUBCASE("distance equal to the bandwidth gives exp(-1)") {
    Eigen::MatrixXd patches(4, 2);
    patches.col(0) << 0, 0, 0, 0;
    patches.col(1) << 3, 0, 4, 0;  // squared distance 25
    const Eigen::VectorXd w = nlem::patch_weights(patches, 0, 5.0);
    CHECK(w(0) == 1.0);
    CHECK(w(1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  }

  SUBCASE("matches a long-double recomputation") {
    std::mt19937_64 rng(83);
    const nlem::Image img = random_image(rng, 5, 8);
    const Eigen::MatrixXd table = nlem::build_patch_table(img, 3);
    const double h = 37.5;
    const Eigen::Index center = 21;
    const Eigen::VectorXd w = nlem::patch_weights(table, center, h);
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      long double sq = 0.0L;
      for (Eigen::Index i = 0; i < table.rows(); ++i) {
        const long double diff =
            static_cast<long double>(table(i, j)) - static_cast<long double>(table(i, center));
        sq += diff * diff;
      }
      const double expected = static_cast<double>(std::exp(-sq / (static_cast<long double>(h) * h)));
      CHECK(w(j) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("rejects a non-positive bandwidth") {
    Eigen::MatrixXd patches = Eigen::MatrixXd::Zero(4, 3);
    CHECK_THROWS_AS(nlem::patch_weights(patches, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(nlem::patch_weights(patches, 0, -1.0), std::invalid_argument);
  }
}

TEST_CASE("corner stack sees the clipped search window") {
  std::mt19937_64 rng(84);
  const nlem::Image img = random_image(rng, 8, 8);
  const Eigen::MatrixXd table = nlem::build_patch_table(img, 3);

  // search side 5 centered at (0, 0): rows and cols clip to {0, 1, 2}
  const nlem::PatchStack stack = nlem::build_patch_stack(table, 8, 8, 0, 0, 5, 20.0);
  REQUIRE(stack.patches.cols() == 9);
  REQUIRE(stack.weights.size() == 9);
  CHECK(stack.self_column == 0);
  CHECK(stack.weights(0) == 1.0);
  CHECK((stack.patches.col(0).array() == nlem::patch_at(img, 0, 0, 3).array()).all());

  // window columns walk the clipped window in row-major order
  Eigen::Index col = 0;
  for (Eigen::Index r = 0; r <= 2; ++r)
    for (Eigen::Index c = 0; c <= 2; ++c, ++col)
      CHECK((stack.patches.col(col).array() == nlem::patch_at(img, r, c, 3).array()).all());
}

TEST_CASE("interior stack covers the full search window") {
  std::mt19937_64 rng(85);
  const nlem::Image img = random_image(rng, 16, 16);
  const Eigen::MatrixXd table = nlem::build_patch_table(img, 3);
  const nlem::PatchStack stack = nlem::build_patch_stack(table, 16, 16, 8, 8, 7, 20.0);
  REQUIRE(stack.patches.cols() == 49);
  // self is the window center: row offset 3 of 7, col offset 3 of 7
  CHECK(stack.self_column == 3 * 7 + 3);
  CHECK(stack.weights(stack.self_column) == 1.0);
}

TEST_CASE("table-backed and image-backed stacks agree") {
  std::mt19937_64 rng(86);
  const nlem::Image img = random_image(rng, 10, 12);
  const int k = 3;
  const int search = 5;
  const double h = 15.0;
  const Eigen::MatrixXd table = nlem::build_patch_table(img, k);

  const std::pair<Eigen::Index, Eigen::Index> pixels[] = {{0, 0}, {9, 11}, {5, 6}, {0, 11}, {2, 1}};
  for (const auto& [r, c] : pixels) {
    const nlem::PatchStack a =
        nlem::build_patch_stack(table, img.rows(), img.cols(), r, c, search, h);
    const nlem::PatchStack b = nlem::build_patch_stack(img, r, c, search, k, h);
    REQUIRE(a.patches.cols() == b.patches.cols());
    CHECK(a.self_column == b.self_column);
    CHECK((a.patches.array() == b.patches.array()).all());
    CHECK((a.weights.array() == b.weights.array()).all());
  }
}
