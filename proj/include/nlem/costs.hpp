#ifndef NLEM_COSTS_HPP
#define NLEM_COSTS_HPP

#include <cmath>
#include <stdexcept>

#include "nlem/types.hpp"

namespace nlem {

/// Weighted sum of Euclidean distances from x to the points.
/// Terms accumulate in index order so repeated evaluations agree bitwise.
template <typename Scalar, typename Derived>
Scalar em_cost(const PointSet<Scalar>& ps, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != ps.dim()) throw std::invalid_argument("query dimension does not match point set");
  Scalar total = Scalar(0);
  for (Eigen::Index k = 0; k < ps.size(); ++k)
    total += ps.weights(k) * (x - ps.points.col(k)).norm();
  return total;
}

/// Smooth surrogate sum_k w_k * sqrt(||x - a_k||^2 + epsilon); strictly above
/// em_cost for epsilon > 0 and within sum_k w_k * sqrt(epsilon) of it.
template <typename Scalar, typename Derived>
Scalar surrogate_cost(const PointSet<Scalar>& ps, const Eigen::MatrixBase<Derived>& x,
                      Scalar epsilon) {
  if (x.size() != ps.dim()) throw std::invalid_argument("query dimension does not match point set");
  if (!(epsilon > Scalar(0))) throw std::invalid_argument("surrogate epsilon must be positive");
  Scalar total = Scalar(0);
  for (Eigen::Index k = 0; k < ps.size(); ++k)
    total += ps.weights(k) * std::sqrt((x - ps.points.col(k)).squaredNorm() + epsilon);
  return total;
}

}  // namespace nlem

#endif  // NLEM_COSTS_HPP
