#ifndef NLEM_NOISE_HPP
#define NLEM_NOISE_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "nlem/image.hpp"

namespace nlem {

/// Deterministic standard-normal stream: mt19937_64 driven Box-Muller,
/// fully pinned down so a seed reproduces the same samples everywhere.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] keeps the log finite
    const double u1 =
        (static_cast<double>(engine_()) + 1.0) / (static_cast<double>(engine_.max()) + 1.0);
    const double u2 =
        static_cast<double>(engine_()) / (static_cast<double>(engine_.max()) + 1.0);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// g = f + sigma * xi with xi iid standard normal, drawn in row-major pixel
/// order from the seeded generator. Values are deliberately not clipped.
Image add_gaussian_noise(const Image& clean, double sigma, std::uint64_t seed);

}  // namespace nlem

#endif  // NLEM_NOISE_HPP
