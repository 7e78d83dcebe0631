#ifndef NLEM_NLEM_HPP
#define NLEM_NLEM_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "nlem/image.hpp"
#include "nlem/patch.hpp"
#include "nlem/types.hpp"

namespace nlem {

enum class DenoiseSolver { Admm, Irls, NlmOnly };

enum class PatchInit { NoisyPatch, NlmPatch };

/// Knobs of the non-local denoisers. `h` is the absolute similarity bandwidth
/// in intensity units (callers working from a noise level typically pass a
/// multiple of sigma). `sigma` itself is informational here; it picks the
/// default initialization via default_init_mode.
struct NlemParams {
  int search = 21;          // search window side S, odd
  int patch = 7;            // patch side k, odd, <= search
  double h = 0.0;           // similarity bandwidth, > 0
  double sigma = 0.0;       // noise standard deviation, >= 0
  DenoiseSolver solver = DenoiseSolver::Admm;
  int solver_iters = 4;
  double mu = 1e-3;         // ADMM penalty
  double epsilon = 1e-6;    // IRLS smoothing
  PatchInit init_mode = PatchInit::NoisyPatch;
  BoxConstraint<double> range = BoxConstraint<double>::interval(0.0, 255.0);
  unsigned threads = 0;     // 0 -> hardware concurrency
};

/// Initialization that works best in practice: the noisy patch at low noise,
/// the non-local-means patch once sigma exceeds 60.
PatchInit default_init_mode(double sigma);

/// Clamps a single intensity into the box (identity when unbounded).
double clip_scalar(double value, const BoxConstraint<double>& box);

void validate(const NlemParams& params);

/// The initialization patch the per-pixel solver starts from: the stack's own
/// noisy patch, or the similarity-weighted mean of all neighbor patches.
Eigen::VectorXd initial_patch(const PatchStack& stack, PatchInit mode);

/// One pixel's regression: the solved patch plus the initialization used.
/// `patch` already respects params.range for every solver.
struct PatchSolve {
  Eigen::VectorXd init;
  Eigen::VectorXd patch;
};

/// Runs the configured solver on one patch stack. With an `on_iterate`
/// callback, hands out the patch a run truncated at that iteration would have
/// produced, once per iteration actually executed.
PatchSolve solve_patch(const PatchStack& stack, const NlemParams& params,
                       const std::function<void(Eigen::Index, const Eigen::VectorXd&)>&
                           on_iterate = nullptr);

/// Classical non-local means: each output pixel is the similarity-weighted
/// mean of the neighbor pixels in its search window, clipped to params.range.
Image nlm_denoise(const Image& noisy, const NlemParams& params);

/// Non-local Euclidean medians: each output pixel is the center coordinate of
/// the weighted Euclidean median of its neighbor patches, solved under the
/// box prior params.range. Solver failures carry the pixel coordinates.
Image nlem_denoise(const Image& noisy, const NlemParams& params);

/// Like nlem_denoise, but returns the denoised image after every solver
/// iteration 1..solver_iters; element t-1 equals nlem_denoise with
/// solver_iters = t. Useful for iteration-vs-quality traces.
std::vector<Image> nlem_denoise_snapshots(const Image& noisy, const NlemParams& params);

}  // namespace nlem

#endif  // NLEM_NLEM_HPP
