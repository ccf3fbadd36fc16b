#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"

namespace volterra {

inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kClampTolerance = 1e-15;

/// Float trajectory of the Volterra operator in skew form.
struct Trajectory {
  std::vector<std::vector<double>> points;  // points[0] = x0
  double max_drift = 0.0;                   // max |sum - 1| before renormalization

  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Iterates V(x)_k = x_k (1 + sum_i a[i][k] x_i) in double precision,
/// renormalizing each step and clamping rounding-level negatives.
inline Trajectory evolve(const SkewMatrix& s, std::vector<double> x0, std::size_t steps) {
  const int m = s.dim();
  if (static_cast<int>(x0.size()) != m) throw ShapeError("start point dimension mismatch");

  double sum = 0.0;
  for (double c : x0) {
    if (!std::isfinite(c)) throw NonFiniteError("start point has a non-finite coordinate");
    if (c < -kClampTolerance) throw SimplexError("start point has a negative coordinate");
    sum += c;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) throw SimplexError("start point is off the simplex");
  for (double& c : x0) c = std::max(c, 0.0) / sum;

  std::vector<std::vector<double>> af(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) af[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = to_double(s.at(i, k));

  Trajectory traj;
  traj.points.reserve(steps + 1);
  traj.points.push_back(x0);
  std::vector<double> x = std::move(x0), y(static_cast<std::size_t>(m));
  for (std::size_t step = 0; step < steps; ++step) {
    double ysum = 0.0;
    for (int k = 0; k < m; ++k) {
      double factor = 1.0;
      for (int i = 0; i < m; ++i) factor += af[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(i)];
      double v = x[static_cast<std::size_t>(k)] * factor;
      if (!std::isfinite(v))
        throw NonFiniteError("coordinate " + std::to_string(k + 1) + " became non-finite at step " +
                             std::to_string(step + 1));
      if (v < 0.0) {
        if (v < -kClampTolerance)
          throw SimplexError("coordinate " + std::to_string(k + 1) + " left the simplex at step " +
                             std::to_string(step + 1));
        v = 0.0;
      }
      y[static_cast<std::size_t>(k)] = v;
      ysum += v;
    }
    traj.max_drift = std::max(traj.max_drift, std::abs(ysum - 1.0));
    for (int k = 0; k < m; ++k) y[static_cast<std::size_t>(k)] /= ysum;
    x = y;
    traj.points.push_back(x);
  }
  return traj;
}

inline constexpr std::size_t kCoordByteCap = std::size_t{1} << 20;  // 1 MB per coordinate

/// Exact reference trajectory via repeated QSO application. Numerator and
/// denominator of every coordinate must stay under the byte cap; the list
/// holds steps+1 points starting at x0.
inline std::vector<SimplexPoint> evolve_exact(const AlgebraSpec& a, const SimplexPoint& x0,
                                              std::size_t steps, std::size_t coord_byte_cap = kCoordByteCap) {
  if (x0.dim() != a.dim()) throw ShapeError("start point dimension mismatch");
  std::vector<SimplexPoint> traj;
  traj.reserve(steps + 1);
  traj.push_back(x0);
  for (std::size_t step = 0; step < steps; ++step) {
    SimplexPoint next = a.apply_qso(traj.back());
    for (const auto& c : next.coords()) {
      const std::size_t bits =
          std::max(mpz_sizeinbase(c.get_num().get_mpz_t(), 2), mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
      if ((bits + 7) / 8 > coord_byte_cap)
        throw CapacityError("coordinate size exceeded " + std::to_string(coord_byte_cap) +
                            " bytes at step " + std::to_string(step + 1));
    }
    traj.push_back(std::move(next));
  }
  return traj;
}

}  // namespace volterra
