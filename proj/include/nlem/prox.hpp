#ifndef NLEM_PROX_HPP
#define NLEM_PROX_HPP

#include <cmath>
#include <stdexcept>

#include "nlem/types.hpp"

namespace nlem {

/// Projection of y onto the closed ball of the given radius centered at 0:
/// min(radius, ||y||) * y / ||y||, with 0 mapped to 0.
template <typename Derived>
typename Derived::PlainObject project_ball(const Eigen::MatrixBase<Derived>& y,
                                           typename Derived::Scalar radius) {
  using Scalar = typename Derived::Scalar;
  if (!(radius >= Scalar(0))) throw std::invalid_argument("ball radius must be nonnegative");
  const Scalar norm = y.norm();
  if (norm <= radius) return y;
  return (radius / norm) * y;
}

/// Proximal map of lambda*||. - u|| evaluated at v:
///
///   v - min(lambda, ||v - u||) * (v - u) / ||v - u||
///
/// pulls v toward u by at most lambda, landing exactly on u once
/// ||v - u|| <= lambda. The v == u case returns u (zero pull).
template <typename DerivedV, typename DerivedU>
typename DerivedV::PlainObject prox_weighted_norm(const Eigen::MatrixBase<DerivedV>& v,
                                                  const Eigen::MatrixBase<DerivedU>& u,
                                                  typename DerivedV::Scalar lambda) {
  using Scalar = typename DerivedV::Scalar;
  using Result = typename DerivedV::PlainObject;
  if (v.size() != u.size()) throw std::invalid_argument("prox operands must share a dimension");
  if (!(lambda >= Scalar(0))) throw std::invalid_argument("pull distance must be nonnegative");
  if (lambda == Scalar(0)) return v;
  Result pull = v - u;
  const Scalar dist = pull.norm();
  if (dist <= lambda) return Result(u);
  return v - (lambda / dist) * pull;
}

/// Coordinate-wise clamp onto the box; identity for the unconstrained variant.
template <typename Derived>
typename Derived::PlainObject project_box(const Eigen::MatrixBase<Derived>& x,
                                          const BoxConstraint<typename Derived::Scalar>& box) {
  if (!box.is_bounded()) return x;
  return x.cwiseMax(box.lower()).cwiseMin(box.upper());
}

}  // namespace nlem

#endif  // NLEM_PROX_HPP
