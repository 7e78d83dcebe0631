#ifndef NLEM_TYPES_HPP
#define NLEM_TYPES_HPP

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlem {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A solver blew up mid-run (non-finite iterate, residual or objective).
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, Eigen::Index iteration)
      : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}

  Eigen::Index iteration() const { return iteration_; }

 private:
  Eigen::Index iteration_;
};

/// Malformed input file; byte_offset points at the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Weighted point cloud: one point per column, nonnegative weight per point.
template <typename Scalar>
struct PointSet {
  MatrixX<Scalar> points;   // d x n
  VectorX<Scalar> weights;  // n

  Eigen::Index dim() const { return points.rows(); }
  Eigen::Index size() const { return points.cols(); }
};

using PointSetd = PointSet<double>;

template <typename Scalar>
void validate(const PointSet<Scalar>& ps) {
  if (ps.size() < 1) throw std::invalid_argument("point set must contain at least one point");
  if (ps.weights.size() != ps.size())
    throw std::invalid_argument("weight count does not match point count");
  if (!ps.points.allFinite()) throw std::invalid_argument("point coordinates must be finite");
  if (!ps.weights.allFinite() || (ps.weights.array() < Scalar(0)).any())
    throw std::invalid_argument("weights must be finite and nonnegative");
  if (!(ps.weights.array() > Scalar(0)).any())
    throw std::invalid_argument("at least one weight must be positive");
}

/// Weighted arithmetic mean of the points; the customary solver seed.
template <typename Scalar>
VectorX<Scalar> weighted_mean(const PointSet<Scalar>& ps) {
  return ps.points * (ps.weights / ps.weights.sum());
}

/// Coordinate-wise interval constraint [l,u]^d, or the whole space.
template <typename Scalar>
class BoxConstraint {
 public:
  static BoxConstraint unconstrained() { return BoxConstraint(); }

  static BoxConstraint interval(Scalar lower, Scalar upper) {
    if (!(lower <= upper)) throw std::invalid_argument("box requires lower <= upper");
    BoxConstraint box;
    box.bounded_ = true;
    box.lower_ = lower;
    box.upper_ = upper;
    return box;
  }

  bool is_bounded() const { return bounded_; }
  Scalar lower() const { return lower_; }
  Scalar upper() const { return upper_; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x) const {
    if (!bounded_) return true;
    return (x.array() >= lower_).all() && (x.array() <= upper_).all();
  }

 private:
  BoxConstraint() = default;

  bool bounded_ = false;
  Scalar lower_ = -std::numeric_limits<Scalar>::infinity();
  Scalar upper_ = std::numeric_limits<Scalar>::infinity();
};

using BoxConstraintd = BoxConstraint<double>;

template <typename Scalar>
struct TraceRecord {
  Eigen::Index iter = 0;
  Scalar objective = Scalar(0);
  // max_k ||x_k - z||; NaN for solvers without a splitting constraint
  Scalar primal_residual = std::numeric_limits<Scalar>::quiet_NaN();
};

template <typename Scalar>
struct AdmmConfig {
  Scalar mu = Scalar(1e-3);         // augmented-Lagrangian penalty
  Eigen::Index max_iter = 100;
  Scalar tol_primal = Scalar(0);    // 0 keeps the fixed-count behavior
  VectorX<Scalar> z_init;           // empty -> weighted mean of the points
  bool record_trace = false;
  std::function<void(Eigen::Index, const VectorX<Scalar>&)> on_iterate;
};

template <typename Scalar>
struct IrlsConfig {
  Scalar epsilon = Scalar(1e-6);    // smoothing of the surrogate objective
  Eigen::Index max_iter = 100;
  Scalar tol = Scalar(0);           // relative surrogate decrease; 0 stops only on
                                    // an exact stall, negative never stops early
  VectorX<Scalar> x_init;           // empty -> weighted mean of the points
  bool record_trace = false;
  std::function<void(Eigen::Index, const VectorX<Scalar>&)> on_iterate;
};

using AdmmConfigd = AdmmConfig<double>;
using IrlsConfigd = IrlsConfig<double>;

template <typename Scalar>
struct SolverResult {
  VectorX<Scalar> minimizer;
  Scalar objective = Scalar(0);   // weighted sum of distances at the minimizer
  Eigen::Index iterations_run = 0;
  std::vector<TraceRecord<Scalar>> trace;
};

using SolverResultd = SolverResult<double>;

}  // namespace nlem

#endif  // NLEM_TYPES_HPP
