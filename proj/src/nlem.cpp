#include "nlem/nlem.hpp"

#include <string>
#include <utility>

#include "nlem/admm.hpp"
#include "nlem/irls.hpp"
#include "nlem/parallel.hpp"
#include "nlem/prox.hpp"

namespace nlem {

Eigen::VectorXd initial_patch(const PatchStack& stack, PatchInit mode) {
  if (stack.self_column < 0 || stack.self_column >= stack.patches.cols())
    throw std::invalid_argument("patch stack has no valid self column");
  if (mode == PatchInit::NoisyPatch) return stack.patches.col(stack.self_column);
  return stack.patches * (stack.weights / stack.weights.sum());
}

PatchSolve solve_patch(const PatchStack& stack, const NlemParams& params,
                       const std::function<void(Eigen::Index, const Eigen::VectorXd&)>&
                           on_iterate) {
  PatchSolve solve;
  solve.init = initial_patch(stack, params.init_mode);

  if (params.solver == DenoiseSolver::NlmOnly) {
    solve.patch = project_box(initial_patch(stack, PatchInit::NlmPatch), params.range);
    if (on_iterate)
      for (Eigen::Index t = 1; t <= params.solver_iters; ++t) on_iterate(t, solve.patch);
    return solve;
  }

  PointSetd ps{stack.patches, stack.weights};

  if (params.solver == DenoiseSolver::Admm) {
    AdmmConfig<double> cfg;
    cfg.mu = params.mu;
    cfg.max_iter = params.solver_iters;
    cfg.z_init = solve.init;
    cfg.on_iterate = on_iterate;  // z is already box-feasible every iteration
    solve.patch = admm_euclidean_median(ps, params.range, cfg).minimizer;
    return solve;
  }

  IrlsConfig<double> cfg;
  cfg.epsilon = params.epsilon;
  cfg.max_iter = params.solver_iters;
  cfg.x_init = solve.init;
  if (on_iterate)
    cfg.on_iterate = [&](Eigen::Index t, const Eigen::VectorXd& x) {
      on_iterate(t, project_box(x, params.range));
    };
  solve.patch =
      project_box(irls_euclidean_median(ps, cfg).minimizer, params.range);
  return solve;
}

namespace {

NumericFailure with_pixel(const NumericFailure& failure, Eigen::Index r, Eigen::Index c) {
  return NumericFailure("pixel (" + std::to_string(r) + ", " + std::to_string(c) +
                            "): " + failure.what(),
                        failure.iteration());
}

}  // namespace

Image nlem_denoise(const Image& noisy, const NlemParams& params) {
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
    try {
      out(r, c) = solve_patch(stack, params).patch(center);
    } catch (const NumericFailure& failure) {
      throw with_pixel(failure, r, c);
    }
  });
  return out;
}

std::vector<Image> nlem_denoise_snapshots(const Image& noisy, const NlemParams& params) {
  validate_image(noisy);
  validate(params);

  const Eigen::Index rows = noisy.rows();
  const Eigen::Index cols = noisy.cols();
  const Eigen::Index center = static_cast<Eigen::Index>(params.patch) * params.patch / 2;
  const Eigen::MatrixXd table = build_patch_table(noisy, params.patch);

  std::vector<Image> frames(static_cast<std::size_t>(params.solver_iters),
                            Image(rows, cols));
  parallel_for(rows * cols, params.threads, [&](Eigen::Index pixel) {
    const Eigen::Index r = pixel / cols;
    const Eigen::Index c = pixel % cols;
    const PatchStack stack =
        build_patch_stack(table, rows, cols, r, c, params.search, params.h);

    // A solver may stop early at a fixed point; unreached iterations keep the
    // last value, matching what a longer run would return.
    std::vector<double> values(static_cast<std::size_t>(params.solver_iters));
    Eigen::Index reached = 0;
    try {
      const PatchSolve solve =
          solve_patch(stack, params, [&](Eigen::Index t, const Eigen::VectorXd& patch) {
            values[static_cast<std::size_t>(t - 1)] = patch(center);
            reached = t;
          });
      for (Eigen::Index t = reached; t < params.solver_iters; ++t)
        values[static_cast<std::size_t>(t)] = solve.patch(center);
    } catch (const NumericFailure& failure) {
      throw with_pixel(failure, r, c);
    }
    for (int t = 0; t < params.solver_iters; ++t)
      frames[static_cast<std::size_t>(t)](r, c) = values[static_cast<std::size_t>(t)];
  });
  return frames;
}

}  // namespace nlem
