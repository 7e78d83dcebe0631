#ifndef NLEM_DIAGNOSTICS_HPP
#define NLEM_DIAGNOSTICS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "nlem/costs.hpp"
#include "nlem/types.hpp"

namespace nlem {

// First-order certificate for the box-constrained weighted-median objective.
//
// Splits the subdifferential at z into the smooth part
//   g = sum_{a_k != z} w_k (z - a_k)/||z - a_k||
// and the ball of radius w0 = sum_{a_k == z} w_k contributed by coincident
// points ("==" meaning within 1e-12). Active box faces absorb the gradient
// components the constraint pushes against; whatever is left beyond the
// ball radius is reported. Zero certifies optimality.
template <typename Scalar, typename Derived>
Scalar optimality_residual(const PointSet<Scalar>& ps, const BoxConstraint<Scalar>& box,
                           const Eigen::MatrixBase<Derived>& z) {
  validate(ps);
  if (z.size() != ps.dim()) throw std::invalid_argument("z dimension does not match point set");
  if (!box.contains(z)) throw std::invalid_argument("z must lie in the constraint box");

  const Scalar coincident = Scalar(1e-12);
  VectorX<Scalar> g = VectorX<Scalar>::Zero(ps.dim());
  Scalar ball_radius = Scalar(0);
  for (Eigen::Index k = 0; k < ps.size(); ++k) {
    VectorX<Scalar> diff = z - ps.points.col(k);
    const Scalar dist = diff.norm();
    if (dist <= coincident)
      ball_radius += ps.weights(k);
    else
      g += (ps.weights(k) / dist) * diff;
  }

  if (box.is_bounded()) {
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      const bool at_lower = z(i) == box.lower();
      const bool at_upper = z(i) == box.upper();
      if (at_lower && at_upper)
        g(i) = Scalar(0);
      else if (at_upper)
        g(i) = std::max(g(i), Scalar(0));  // the face absorbs any push upward
      else if (at_lower)
        g(i) = std::min(g(i), Scalar(0));
    }
  }

  return std::max(Scalar(0), g.norm() - ball_radius);
}

// Grid-search oracle for 2-D instances: scans a resolution x resolution grid
// over the points' bounding box clamped into the constraint box, then twice
// re-grids a two-cell margin around the incumbent. Test equipment, not a
// solver; the returned cost upper-bounds the true minimum.
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, 2, 1>, Scalar> brute_force_median_2d(
    const PointSet<Scalar>& ps, const BoxConstraint<Scalar>& box, Eigen::Index resolution) {
  validate(ps);
  if (ps.dim() != 2) throw std::invalid_argument("brute_force_median_2d requires d == 2");
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");

  using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
  const auto clamp_to_box = [&](Scalar v) {
    return box.is_bounded() ? std::clamp(v, box.lower(), box.upper()) : v;
  };

  Vector2 lo, hi;
  for (int i = 0; i < 2; ++i) {
    lo(i) = clamp_to_box(ps.points.row(i).minCoeff());
    hi(i) = clamp_to_box(ps.points.row(i).maxCoeff());
  }

  Vector2 best = lo;
  Scalar best_cost = std::numeric_limits<Scalar>::infinity();
  constexpr int kRefinements = 2;
  for (int pass = 0; pass <= kRefinements; ++pass) {
    const Vector2 step = (hi - lo) / Scalar(resolution - 1);
    Vector2 probe;
    for (Eigen::Index i = 0; i < resolution; ++i) {
      probe(0) = lo(0) + Scalar(i) * step(0);
      for (Eigen::Index j = 0; j < resolution; ++j) {
        probe(1) = lo(1) + Scalar(j) * step(1);
        const Scalar cost = em_cost(ps, probe);
        if (cost < best_cost) {
          best_cost = cost;
          best = probe;
        }
      }
    }
    // re-grid around the incumbent with a margin of two cells
    for (int i = 0; i < 2; ++i) {
      const Scalar margin = Scalar(2) * step(i);
      lo(i) = clamp_to_box(std::max(lo(i), best(i) - margin));
      hi(i) = clamp_to_box(std::min(hi(i), best(i) + margin));
    }
  }
  return {best, best_cost};
}

}  // namespace nlem

#endif  // NLEM_DIAGNOSTICS_HPP
