#include "nlem/nlem.hpp"

#include <algorithm>

#include "nlem/parallel.hpp"

namespace nlem {

double clip_scalar(double value, const BoxConstraint<double>& box) {
  return box.is_bounded() ? std::clamp(value, box.lower(), box.upper()) : value;
}

PatchInit default_init_mode(double sigma) {
  return sigma <= 60.0 ? PatchInit::NoisyPatch : PatchInit::NlmPatch;
}

void validate(const NlemParams& params) {
  if (params.search < 1 || params.search % 2 == 0)
    throw std::invalid_argument("search window must be odd and positive");
  if (params.patch < 1 || params.patch % 2 == 0)
    throw std::invalid_argument("patch size must be odd and positive");
  if (params.patch > params.search)
    throw std::invalid_argument("patch size must not exceed the search window");
  if (!(params.h > 0.0)) throw std::invalid_argument("similarity bandwidth h must be positive");
  if (!(params.sigma >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");
  if (params.solver_iters < 1) throw std::invalid_argument("solver_iters must be at least 1");
  if (!(params.mu > 0.0)) throw std::invalid_argument("penalty mu must be positive");
  if (!(params.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

Image nlm_denoise(const Image& noisy, const NlemParams& params) {
  validate_image(noisy);
  validate(params);

  const Eigen::Index rows = noisy.rows();
  const Eigen::Index cols = noisy.cols();
  const Eigen::Index center = static_cast<Eigen::Index>(params.patch) * params.patch / 2;
  const Eigen::MatrixXd table = build_patch_table(noisy, params.patch);

  Image out(rows, cols);
  parallel_for(rows * cols, params.threads, [&](Eigen::Index pixel) {
    const Eigen::Index r = pixel / cols;
    const Eigen::Index c = pixel % cols;
    const PatchStack stack =
        build_patch_stack(table, rows, cols, r, c, params.search, params.h);
    const double mean =
        stack.weights.dot(stack.patches.row(center)) / stack.weights.sum();
    out(r, c) = clip_scalar(mean, params.range);
  });
  return out;
}

}  // namespace nlem
