#include <cmath>

#include <doctest.h>

#include "nlem/noise.hpp"
#include "nlem/psnr.hpp"
#include "support/synthetic.hpp"

TEST_CASE("zero sigma reproduces the input bit for bit") {
  const nlem::Image clean = testsupport::house_like(32);
  const nlem::Image noisy = nlem::add_gaussian_noise(clean, 0.0, 12345);
  CHECK((noisy.array() == clean.array()).all());
}

TEST_CASE("noise statistics match the requested sigma") {
  const nlem::Image clean = nlem::Image::Constant(64, 64, 128.0);
  const double sigma = 20.0;
  const nlem::Image noisy = nlem::add_gaussian_noise(clean, sigma, 99);
  const nlem::Image delta = noisy - clean;

  const double n = static_cast<double>(delta.size());
  const double mean = delta.sum() / n;
  const double var = (delta.array() - mean).square().sum() / (n - 1.0);

  // mean of 4096 iid N(0, 20^2) samples: std 20/64, allow three of those
  CHECK(std::abs(mean) <= 3.0 * sigma / 64.0);
  CHECK(std::sqrt(var) == doctest::Approx(sigma).epsilon(0.05));
}

TEST_CASE("same seed gives the same field, different seeds differ") {
  const nlem::Image clean = testsupport::house_like(24);
  const nlem::Image a = nlem::add_gaussian_noise(clean, 15.0, 7);
  const nlem::Image b = nlem::add_gaussian_noise(clean, 15.0, 7);
  const nlem::Image c = nlem::add_gaussian_noise(clean, 15.0, 8);
  CHECK((a.array() == b.array()).all());
  CHECK((a.array() != c.array()).any());
}

TEST_CASE("noise is not clipped to the display range") {
  // a bright flat image pushed past 255 must keep its excursions
  const nlem::Image clean = nlem::Image::Constant(48, 48, 250.0);
  const nlem::Image noisy = nlem::add_gaussian_noise(clean, 30.0, 4);
  CHECK(noisy.maxCoeff() > 255.0);
  CHECK(noisy.minCoeff() < 250.0);
}

TEST_CASE("corrupted-image quality lands on the closed-form value") {
  // PSNR of sigma-noise against the clean frame is 20*log10(255/sigma)
  // up to sampling error, tiny at 512^2 samples
  const nlem::Image clean = testsupport::house_like(512);
  const double sigma = 40.0;
  const nlem::Image noisy = nlem::add_gaussian_noise(clean, sigma, 2026);
  const double expected = 20.0 * std::log10(255.0 / sigma);
  CHECK(nlem::psnr(clean, noisy) == doctest::Approx(expected).epsilon(0.005));
}

TEST_CASE("gaussian sampler is standard normal to sampling accuracy") {
  nlem::GaussianSampler sampler(17);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  int within_one = 0;
  for (int i = 0; i < n; ++i) {
    const double x = sampler.next();
    sum += x;
    sum_sq += x * x;
    if (std::abs(x) <= 1.0) ++within_one;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) <= 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
  // P(|Z| <= 1) = 0.6827
  CHECK(static_cast<double>(within_one) / n == doctest::Approx(0.6827).epsilon(0.01));
}
