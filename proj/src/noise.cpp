#include "nlem/noise.hpp"

#include <stdexcept>

namespace nlem {

Image add_gaussian_noise(const Image& clean, double sigma, std::uint64_t seed) {
  validate_image(clean);
  if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be nonnegative");
  if (sigma == 0.0) return clean;

  Image noisy = clean;
  GaussianSampler sampler(seed);
  double* p = noisy.data();  // row-major
  for (Eigen::Index i = 0; i < noisy.size(); ++i) p[i] += sigma * sampler.next();
  return noisy;
}

}  // namespace nlem
