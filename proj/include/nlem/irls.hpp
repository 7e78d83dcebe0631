#ifndef NLEM_IRLS_HPP
#define NLEM_IRLS_HPP

#include <cmath>
#include <stdexcept>

#include "nlem/costs.hpp"
#include "nlem/types.hpp"

namespace nlem {

// Iteratively reweighted least squares on the smooth surrogate
// sum_k w_k sqrt(||x - a_k||^2 + epsilon): each sweep is the weighted average
//
//   x <- sum_k beta_k a_k / sum_k beta_k,
//   beta_k = w_k / sqrt(||x - a_k||^2 + epsilon),
//
// a majorize-minimize step, so the surrogate never increases. Stops after
// max_iter sweeps or when the relative surrogate decrease falls to tol.
// Unconstrained; callers clip afterwards if a box applies.
template <typename Scalar>
SolverResult<Scalar> irls_euclidean_median(const PointSet<Scalar>& ps,
                                           const IrlsConfig<Scalar>& cfg) {
  validate(ps);
  if (!(cfg.epsilon > Scalar(0))) throw std::invalid_argument("epsilon must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (cfg.x_init.size() != 0 && cfg.x_init.size() != ps.dim())
    throw std::invalid_argument("x_init dimension does not match point set");

  const Eigen::Index n = ps.size();

  VectorX<Scalar> x = cfg.x_init.size() ? cfg.x_init : VectorX<Scalar>(weighted_mean(ps));
  VectorX<Scalar> beta(n);

  SolverResult<Scalar> result;
  if (cfg.record_trace) result.trace.reserve(static_cast<std::size_t>(cfg.max_iter));

  Scalar previous = surrogate_cost(ps, x, cfg.epsilon);
  if (!std::isfinite(previous)) throw NumericFailure("non-finite IRLS objective", 0);

  Eigen::Index iterations = 0;
  for (Eigen::Index t = 1; t <= cfg.max_iter; ++t) {
    iterations = t;

    for (Eigen::Index k = 0; k < n; ++k)
      beta(k) = ps.weights(k) /
                std::sqrt((x - ps.points.col(k)).squaredNorm() + cfg.epsilon);
    x = (ps.points * beta) / beta.sum();

    if (!x.allFinite()) throw NumericFailure("non-finite IRLS iterate", t);
    const Scalar current = surrogate_cost(ps, x, cfg.epsilon);
    if (!std::isfinite(current)) throw NumericFailure("non-finite IRLS objective", t);

    if (cfg.record_trace)
      result.trace.push_back({t, current, std::numeric_limits<Scalar>::quiet_NaN()});
    if (cfg.on_iterate) cfg.on_iterate(t, x);

    if (previous - current <= cfg.tol * std::abs(previous)) break;
    previous = current;
  }

  result.minimizer = std::move(x);
  result.objective = em_cost(ps, result.minimizer);
  result.iterations_run = iterations;
  if (!std::isfinite(result.objective))
    throw NumericFailure("non-finite IRLS objective", iterations);
  return result;
}

}  // namespace nlem

#endif  // NLEM_IRLS_HPP
