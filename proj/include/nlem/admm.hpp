#ifndef NLEM_ADMM_HPP
#define NLEM_ADMM_HPP

#include <cmath>
#include <stdexcept>

#include "nlem/costs.hpp"
#include "nlem/prox.hpp"
#include "nlem/types.hpp"

namespace nlem {

// Splitting-based solver for the box-constrained weighted Euclidean median
//
//   min_{z in C} sum_k w_k ||z - a_k||
//
// One local copy x_k per distance term, consensus constraint x_k = z, and
// dual ascent on the multipliers y_k:
//
//   x_k <- prox of (w_k/mu)*||. - a_k|| at z - y_k/mu   (closed form)
//   z   <- P_C( (1/n) sum_k (x_k + y_k/mu) )
//   y_k <- y_k + mu (x_k - z)
//
// Multipliers start at zero. Stops after max_iter sweeps or as soon as the
// primal residual max_k ||x_k - z|| drops to tol_primal.
template <typename Scalar>
SolverResult<Scalar> admm_euclidean_median(const PointSet<Scalar>& ps,
                                           const BoxConstraint<Scalar>& box,
                                           const AdmmConfig<Scalar>& cfg) {
  validate(ps);
  if (!(cfg.mu > Scalar(0))) throw std::invalid_argument("penalty mu must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (cfg.z_init.size() != 0 && cfg.z_init.size() != ps.dim())
    throw std::invalid_argument("z_init dimension does not match point set");

  const Eigen::Index d = ps.dim();
  const Eigen::Index n = ps.size();
  const Scalar inv_mu = Scalar(1) / cfg.mu;

  VectorX<Scalar> z = cfg.z_init.size() ? cfg.z_init : VectorX<Scalar>(weighted_mean(ps));
  MatrixX<Scalar> y = MatrixX<Scalar>::Zero(d, n);
  MatrixX<Scalar> x(d, n);
  VectorX<Scalar> r(d);

  SolverResult<Scalar> result;
  if (cfg.record_trace) result.trace.reserve(static_cast<std::size_t>(cfg.max_iter));

  Eigen::Index iterations = 0;
  for (Eigen::Index t = 1; t <= cfg.max_iter; ++t) {
    iterations = t;

    r.setZero();
    for (Eigen::Index k = 0; k < n; ++k) {
      x.col(k) = prox_weighted_norm(z - inv_mu * y.col(k), ps.points.col(k),
                                    inv_mu * ps.weights(k));
      r += x.col(k) + inv_mu * y.col(k);
    }

    z = project_box(r / Scalar(n), box);

    Scalar residual = Scalar(0);
    for (Eigen::Index k = 0; k < n; ++k) {
      residual = std::max(residual, (x.col(k) - z).norm());
      y.col(k) += cfg.mu * (x.col(k) - z);
    }

    if (!z.allFinite() || !std::isfinite(residual))
      throw NumericFailure("non-finite ADMM iterate", t);

    if (cfg.record_trace) {
      const Scalar objective = em_cost(ps, z);
      if (!std::isfinite(objective)) throw NumericFailure("non-finite ADMM objective", t);
      result.trace.push_back({t, objective, residual});
    }
    if (cfg.on_iterate) cfg.on_iterate(t, z);

    if (residual <= cfg.tol_primal) break;
  }

  result.minimizer = std::move(z);
  result.objective = em_cost(ps, result.minimizer);
  result.iterations_run = iterations;
  if (!std::isfinite(result.objective))
    throw NumericFailure("non-finite ADMM objective", iterations);
  return result;
}

}  // namespace nlem

#endif  // NLEM_ADMM_HPP
