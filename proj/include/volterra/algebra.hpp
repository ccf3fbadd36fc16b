#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/rational.hpp"

namespace volterra {

/// Point of the probability simplex: coordinates >= 0 summing to exactly 1.
class SimplexPoint {
 public:
  explicit SimplexPoint(Element coords) : coords_(std::move(coords)) {
    Rational sum(0);
    for (const auto& c : coords_) {
      if (c < 0) throw SimplexError("simplex coordinate is negative");
      sum += c;
    }
    if (sum != 1) throw SimplexError("simplex coordinates sum to " + to_string(sum) + ", not 1");
  }

  static SimplexPoint vertex(int dim, int i) { return SimplexPoint(basis_element(dim, i)); }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Element& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const SimplexPoint&) const = default;

 private:
  Element coords_;
};

/// Skew-symmetric matrix of a Volterra operator: a[i][k] = -a[k][i], |a[i][k]| <= 1.
/// Entry (i,k) is the coefficient of x_i in coordinate k of V(x) = x_k(1 + sum_i a[i][k] x_i).
class SkewMatrix {
 public:
  explicit SkewMatrix(std::vector<std::vector<Rational>> entries) : a_(std::move(entries)) {
    dim_ = static_cast<int>(a_.size());
    for (const auto& row : a_)
      if (static_cast<int>(row.size()) != dim_) throw ShapeError("skew matrix is not square");
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < dim_; ++k) {
        if (abs(a_[i][k]) > 1)
          throw RangeError("skew entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                           ") has |a| > 1");
        if (a_[i][k] != -a_[k][i])
          throw ShapeError("matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                           std::to_string(k + 1) + ")");
      }
    }
  }

  int dim() const { return dim_; }
  const Rational& at(int i, int k) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }
  const std::vector<std::vector<Rational>>& entries() const { return a_; }

  bool operator==(const SkewMatrix&) const = default;

 private:
  std::vector<std::vector<Rational>> a_;
  int dim_ = 0;
};

/// Genetic Volterra algebra given by its reduced heredity matrix.
///
/// The stored matrix keeps p[i][j] = p_{ij,i} with unit diagonal; the full
/// heredity tensor is recovered on demand since p_{ij,k} vanishes for
/// k outside {i,j}. All indices in the API are 0-based; I/O is 1-based.
class AlgebraSpec {
 public:
  static AlgebraSpec from_coeffs(int dim, std::vector<std::vector<Rational>> p) {
    if (static_cast<int>(p.size()) != dim)
      throw ShapeError("matrix has " + std::to_string(p.size()) + " rows, expected " + std::to_string(dim));
    return from_coeffs(std::move(p));
  }

  static AlgebraSpec from_coeffs(std::vector<std::vector<Rational>> p) {
    const int m = static_cast<int>(p.size());
    if (m == 0) throw ShapeError("empty coefficient matrix");
    for (const auto& row : p)
      if (static_cast<int>(row.size()) != m) throw ShapeError("coefficient matrix is not square");
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (p[i][j] < 0 || p[i][j] > 1)
          throw RangeError("coefficient (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") = " + to_string(p[i][j]) + " outside [0,1]");
      }
      if (p[i][i] != 1)
        throw ComplementError("diagonal entry (" + std::to_string(i + 1) + "," +
                              std::to_string(i + 1) + ") must be 1");
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[i][j] + p[j][i] != 1)
          throw ComplementError("p(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") + p(" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                ") = " + to_string(Rational(p[i][j] + p[j][i])) + ", expected 1");
    return AlgebraSpec(std::move(p));
  }

  /// Inverse of to_skew: p_{ik,k} = (1 + a[i][k]) / 2.
  static AlgebraSpec from_skew(const SkewMatrix& s) {
    const int m = s.dim();
    std::vector<std::vector<Rational>> p(static_cast<std::size_t>(m),
                                         std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) {
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      for (int k = 0; k < m; ++k) {
        if (i == k) continue;
        // row k of the reduced matrix stores p_{ki,k} = p_{ik,k}
        p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = Rational(1 + s.at(i, k)) / 2;
      }
    }
    return from_coeffs(std::move(p));
  }

  int dim() const { return dim_; }

  /// Reduced coefficient p_{ij,i}.
  const Rational& p(int i, int j) const {
    check_index(i);
    check_index(j);
    return p_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Full heredity tensor entry p_{ij,k}.
  Rational tensor(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (k == i) return p(i, j);
    if (k == j) return p(j, i);
    return Rational(0);
  }

  /// Algebra product (x o y)_k = sum_{i,j} p_{ij,k} x_i y_j on arbitrary vectors.
  Element multiply(const Element& x, const Element& y) const {
    const auto m = static_cast<std::size_t>(dim_);
    if (x.size() != m || y.size() != m) throw ShapeError("element length does not match algebra dimension");

    // Accumulate numerators over a common denominator so each coordinate
    // canonicalizes once; trajectory iterates make per-operation gcds costly.
    mpz_class lx(1);
    for (const auto& c : x) mpz_lcm(lx.get_mpz_t(), lx.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> nx(m);
    for (std::size_t i = 0; i < m; ++i) nx[i] = x[i].get_num() * (lx / x[i].get_den());

    Element out(m);
    if (&x == &y) {
      // squaring factors per coordinate: (x o x)_k = x_k (x_k + 2 sum p_{ik,k} x_i)
      const mpz_class den = pden_ * lx * lx;
      for (std::size_t k = 0; k < m; ++k) {
        mpz_class acc = pden_ * nx[k];
        for (std::size_t i = 0; i < m; ++i)
          if (i != k) acc += 2 * pnum_[k][i] * nx[i];
        acc *= nx[k];
        Rational q(std::move(acc), den);
        q.canonicalize();
        out[k] = std::move(q);
      }
      return out;
    }

    mpz_class ly(1);
    for (const auto& c : y) mpz_lcm(ly.get_mpz_t(), ly.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ny(m);
    for (std::size_t i = 0; i < m; ++i) ny[i] = y[i].get_num() * (ly / y[i].get_den());

    std::vector<std::vector<mpz_class>> cross(m, std::vector<mpz_class>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) cross[i][j] = nx[i] * ny[j];

    const mpz_class den = pden_ * lx * ly;
    for (std::size_t k = 0; k < m; ++k) {
      mpz_class acc = pden_ * cross[k][k];
      for (std::size_t i = 0; i < m; ++i) {
        if (i == k) continue;
        acc += pnum_[k][i] * (cross[i][k] + cross[k][i]);
      }
      Rational q(std::move(acc), den);
      q.canonicalize();
      out[k] = std::move(q);
    }
    return out;
  }

  /// One generation of the quadratic stochastic operator: x' = x o x.
  SimplexPoint apply_qso(const SimplexPoint& x) const {
    if (x.dim() != dim_) throw ShapeError("point dimension does not match algebra");
    return SimplexPoint(multiply(x.coords(), x.coords()));
  }

  /// Skew-symmetric representation: a[i][k] = 2 p_{ik,k} - 1.
  SkewMatrix to_skew() const {
    const auto m = static_cast<std::size_t>(dim_);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (i != k) a[i][k] = 2 * p_[k][i] - 1;
    return SkewMatrix(std::move(a));
  }

  bool operator==(const AlgebraSpec& o) const { return p_ == o.p_; }

 private:
  explicit AlgebraSpec(std::vector<std::vector<Rational>> p) : p_(std::move(p)) {
    dim_ = static_cast<int>(p_.size());
    pden_ = 1;
    for (const auto& row : p_)
      for (const auto& q : row) mpz_lcm(pden_.get_mpz_t(), pden_.get_mpz_t(), q.get_den().get_mpz_t());
    pnum_.assign(p_.size(), std::vector<mpz_class>(p_.size()));
    for (std::size_t i = 0; i < p_.size(); ++i)
      for (std::size_t j = 0; j < p_.size(); ++j)
        pnum_[i][j] = p_[i][j].get_num() * (pden_ / p_[i][j].get_den());
  }

  void check_index(int i) const {
    if (i < 0 || i >= dim_) throw IndexError("index " + std::to_string(i + 1) + " out of range");
  }

  std::vector<std::vector<Rational>> p_;  // p_[i][j] = p_{ij,i}
  std::vector<std::vector<mpz_class>> pnum_;  // p_ scaled to the common denominator pden_
  mpz_class pden_;
  int dim_ = 0;
};

/// Exact evaluation of the skew form V(x)_k = x_k (1 + sum_i a[i][k] x_i).
inline SimplexPoint apply_skew_exact(const SkewMatrix& s, const SimplexPoint& x) {
  if (x.dim() != s.dim()) throw ShapeError("point dimension does not match skew matrix");
  const int m = s.dim();
  Element out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    Rational factor(1);
    for (int i = 0; i < m; ++i) factor += s.at(i, k) * x[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] * factor;
  }
  return SimplexPoint(std::move(out));
}

}  // namespace volterra
