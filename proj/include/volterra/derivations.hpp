#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"
#include "volterra/linalg.hpp"

namespace volterra {

/// Linear maps are m x m rational matrices; row i holds the coordinates of
/// the image of e_i.
using LinearMap = Mat;

struct DerivationSpace {
  std::vector<LinearMap> basis;  // canonical nullspace basis, reshaped
  std::size_t dim() const { return basis.size(); }
};

inline constexpr int kDerivationDimCap = 12;

/// Image of x under the linear map: D(x)_j = sum_i x_i d_{ij}.
inline Element apply_map(const LinearMap& d, const Element& x) {
  if (d.rows() != x.size() || d.cols() != x.size()) throw ShapeError("map/vector size mismatch");
  Element out(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += x[i] * d(i, j);
  }
  return out;
}

/// Full derivation space of the algebra: the exact nullspace of the Leibniz
/// constraint system on basis pairs, in the unknowns d_{ij} ordered
/// row-major (d_11, d_12, ..., d_mm).
inline DerivationSpace derivation_space(const AlgebraSpec& a) {
  const int m = a.dim();
  if (m > kDerivationDimCap)
    throw CapacityError("dimension " + std::to_string(m) + " exceeds derivation solver cap " +
                        std::to_string(kDerivationDimCap));
  const auto mm = static_cast<std::size_t>(m);
  const auto idx = [mm](std::size_t i, std::size_t j) { return i * mm + j; };

  // One equation per unordered basis pair and coordinate: the e_k coefficient
  // of D(e_i o e_j) - D(e_i) o e_j - e_i o D(e_j) vanishes. Commutativity of
  // the product makes ordered pairs redundant.
  Mat sys(mm * (mm + 1) / 2 * mm, mm * mm);
  std::size_t row = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j),
                   sk = static_cast<std::size_t>(k);
        if (i == j) {
          sys(row, idx(si, sk)) += 1;
        } else {
          sys(row, idx(si, sk)) += a.tensor(i, j, i);
          sys(row, idx(sj, sk)) += a.tensor(i, j, j);
        }
        for (int s = 0; s < m; ++s) {
          const auto ss = static_cast<std::size_t>(s);
          sys(row, idx(si, ss)) -= a.tensor(s, j, k);
          sys(row, idx(sj, ss)) -= a.tensor(s, i, k);
        }
        ++row;
      }
    }
  }

  const Mat null = nullspace_basis(sys);
  DerivationSpace space;
  space.basis.reserve(null.rows());
  for (std::size_t b = 0; b < null.rows(); ++b) {
    LinearMap d(mm, mm);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = 0; j < mm; ++j) d(i, j) = null(b, idx(i, j));
    space.basis.push_back(std::move(d));
  }
  return space;
}

/// Independent oracle: the Leibniz identity checked directly on basis pairs.
inline bool verify_derivation(const AlgebraSpec& a, const LinearMap& d) {
  const int m = a.dim();
  if (d.rows() != static_cast<std::size_t>(m) || d.cols() != static_cast<std::size_t>(m))
    throw ShapeError("map size does not match algebra dimension");
  for (int i = 0; i < m; ++i) {
    const Element ei = basis_element(m, i);
    const Element dei = d.row(static_cast<std::size_t>(i));
    for (int j = 0; j < m; ++j) {
      const Element ej = basis_element(m, j);
      const Element lhs = apply_map(d, a.multiply(ei, ej));
      const Element rhs = add(a.multiply(dei, ej), a.multiply(ei, d.row(static_cast<std::size_t>(j))));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/// I_i = { j != i : p_{ij,i} = 1/2 }.
inline std::vector<int> half_set(const AlgebraSpec& a, int i) {
  if (i < 0 || i >= a.dim()) throw IndexError("index out of range");
  std::vector<int> out;
  const Rational half = rat(1, 2);
  for (int j = 0; j < a.dim(); ++j)
    if (j != i && a.p(i, j) == half) out.push_back(j);
  return out;
}

/// Support pattern: every basis derivation has d_{ij} = 0 for j != i outside I_i.
inline bool check_support_lemma(const AlgebraSpec& a, const DerivationSpace& space) {
  const int m = a.dim();
  const Rational half = rat(1, 2);
  for (const auto& d : space.basis)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && a.p(i, j) != half && d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 0)
          return false;
  return true;
}

/// Three-dimensional criterion: some relabeling (i,j,k) of {1,2,3} has
/// p_{ij,i} = 1/2 and p_{ik,i} = p_{jk,j}.
inline bool exists_nontrivial_derivation_3d(const AlgebraSpec& a) {
  if (a.dim() != 3) throw DimensionError("criterion applies to dimension 3");
  const Rational half = rat(1, 2);
  constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& q : perms) {
    const int i = q[0], j = q[1], k = q[2];
    if (a.p(i, j) == half && a.p(i, k) == a.p(j, k)) return true;
  }
  return false;
}

}  // namespace volterra
