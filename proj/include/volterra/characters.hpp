#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"

namespace volterra {

/// Index subset E defining the functional h_E(x) = sum_{i in E} x_i.
/// E = {} and E = I always pass and are flagged trivial.
struct CharacterSet {
  std::vector<int> subset;  // 0-based, sorted
  bool is_trivial = false;

  bool operator==(const CharacterSet&) const = default;
};

inline constexpr int kCharacterEnumerationCap = 20;

namespace detail {

inline std::uint32_t subset_mask(const AlgebraSpec& a, const std::vector<int>& e) {
  std::uint32_t mask = 0;
  for (int i : e) {
    if (i < 0 || i >= a.dim()) throw IndexError("subset index " + std::to_string(i + 1) + " out of range");
    mask |= (1u << i);
  }
  return mask;
}

// Theorem criterion on a bitmask: p_{ij,j} = 0 for every i outside E, j in E.
inline bool is_character_mask(const AlgebraSpec& a, std::uint32_t mask) {
  const int m = a.dim();
  for (int j = 0; j < m; ++j) {
    if (!(mask & (1u << j))) continue;
    for (int i = 0; i < m; ++i) {
      if (i == j || (mask & (1u << i))) continue;
      if (a.p(j, i) != 0) return false;  // p(j,i) stores p_{ji,j} = p_{ij,j}
    }
  }
  return true;
}

inline std::vector<int> mask_to_subset(std::uint32_t mask, int m) {
  std::vector<int> e;
  for (int i = 0; i < m; ++i)
    if (mask & (1u << i)) e.push_back(i);
  return e;
}

}  // namespace detail

/// Decides whether h_E is a character via the coefficient criterion.
inline bool is_character(const AlgebraSpec& a, const std::vector<int>& e) {
  return detail::is_character_mask(a, detail::subset_mask(a, e));
}

/// Independent check: multiplicativity of h_E on every basis pair. Both
/// sides are bilinear, so basis pairs decide the identity on all of A.
inline bool verify_character_bruteforce(const AlgebraSpec& a, const std::vector<int>& e) {
  const std::uint32_t mask = detail::subset_mask(a, e);
  const int m = a.dim();
  auto h = [&](const Element& x) {
    Rational s(0);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s += x[static_cast<std::size_t>(i)];
    return s;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Element prod = a.multiply(basis_element(m, i), basis_element(m, j));
      const Rational hi((mask >> i) & 1u), hj((mask >> j) & 1u);
      if (h(prod) != hi * hj) return false;
    }
  }
  return true;
}

/// All character subsets, sorted by (size, lexicographic). Trivial subsets
/// ({} and I) are reported only when include_trivial is set.
inline std::vector<CharacterSet> enumerate_characters(const AlgebraSpec& a, bool include_trivial,
                                                      int cap = kCharacterEnumerationCap) {
  const int m = a.dim();
  if (m > cap || m > 31)
    throw CapacityError("dimension " + std::to_string(m) + " exceeds enumeration cap " +
                        std::to_string(std::min(cap, 31)));
  const std::uint32_t full = (1u << m) - 1u;
  std::vector<CharacterSet> out;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const bool trivial = (mask == 0 || mask == full);
    if (trivial && !include_trivial) continue;
    if (!detail::is_character_mask(a, mask)) continue;
    out.push_back({detail::mask_to_subset(mask, m), trivial});
  }
  std::sort(out.begin(), out.end(), [](const CharacterSet& x, const CharacterSet& y) {
    if (x.subset.size() != y.subset.size()) return x.subset.size() < y.subset.size();
    return x.subset < y.subset;
  });
  return out;
}

}  // namespace volterra
