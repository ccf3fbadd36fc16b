#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"

namespace volterra {

inline constexpr int kExtremalDimCap = 6;

struct RandomOptions {
  bool exclude_half = false;  // keep every off-diagonal coefficient away from 1/2
};

/// Random algebras with off-diagonal coefficients drawn from {k/64}.
/// mt19937_64 with a fixed reduction keeps corpora identical across runs.
inline std::vector<AlgebraSpec> random_corpus(int dim, std::size_t count, std::uint64_t seed,
                                              RandomOptions opts = {}) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::vector<AlgebraSpec> out;
  out.reserve(count);
  const auto m = static_cast<std::size_t>(dim);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::vector<Rational>> p(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) p[i][i] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        long k = static_cast<long>(rng() % 65);
        while (opts.exclude_half && k == 32) k = static_cast<long>(rng() % 65);
        p[i][j] = rat(k, 64);
        p[j][i] = rat(64 - k, 64);
      }
    }
    out.push_back(AlgebraSpec::from_coeffs(std::move(p)));
  }
  return out;
}

/// All 2^C(m,2) extremal algebras: each unordered pair carries p_{ij,i} in {0,1}.
inline std::vector<AlgebraSpec> extremal_exhaustive_corpus(int dim) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  if (dim > kExtremalDimCap)
    throw CapacityError("extremal enumeration capped at dimension " + std::to_string(kExtremalDimCap));
  const auto m = static_cast<std::size_t>(dim);
  const int npairs = dim * (dim - 1) / 2;
  std::vector<AlgebraSpec> out;
  out.reserve(std::size_t{1} << npairs);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << npairs); ++mask) {
    std::vector<std::vector<Rational>> p(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) p[i][i] = 1;
    int bit = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j, ++bit) {
        const bool one = (mask >> bit) & 1u;
        p[i][j] = one ? 1 : 0;
        p[j][i] = one ? 0 : 1;
      }
    }
    out.push_back(AlgebraSpec::from_coeffs(std::move(p)));
  }
  return out;
}

/// Dimension-3 grid: Cartesian cube of the given values over
/// (p_{12,1}, p_{13,1}, p_{23,2}).
inline std::vector<AlgebraSpec> grid_3d_corpus(const std::vector<Rational>& values) {
  if (values.empty()) throw RangeError("empty grid");
  for (const auto& v : values)
    if (v < 0 || v > 1) throw RangeError("grid value " + to_string(v) + " outside [0,1]");
  std::vector<AlgebraSpec> out;
  out.reserve(values.size() * values.size() * values.size());
  for (const auto& p12 : values) {
    for (const auto& p13 : values) {
      for (const auto& p23 : values) {
        std::vector<std::vector<Rational>> p(3, std::vector<Rational>(3));
        p[0][0] = p[1][1] = p[2][2] = 1;
        p[0][1] = p12;
        p[1][0] = 1 - p12;
        p[0][2] = p13;
        p[2][0] = 1 - p13;
        p[1][2] = p23;
        p[2][1] = 1 - p23;
        out.push_back(AlgebraSpec::from_coeffs(std::move(p)));
      }
    }
  }
  return out;
}

}  // namespace volterra
