#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/rational.hpp"

namespace volterra {

/// Dense matrix of exact rationals, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Element row(std::size_t r) const {
    Element v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }

  void set_row(std::size_t r, const Element& v) {
    if (v.size() != cols_) throw ShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  void append_row(const Element& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw ShapeError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& q : data_)
      if (q != 0) return false;
    return true;
  }

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Gauss-Jordan reduction to reduced row echelon form. Returns the pivot
/// columns in order; the reduction is deterministic (first nonzero pivot).
inline std::vector<std::size_t> rref_in_place(Mat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pr = r;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pr, j));
    const Rational inv = 1 / Rational(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat a) { return rref_in_place(a).size(); }

/// Canonical basis of {v : a v = 0}, one row per free column in ascending
/// order, with a unit entry at the free column.
inline Mat nullspace_basis(const Mat& a) {
  Mat r = a;
  const auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  Mat basis(0, a.cols());
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Element v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.append_row(v);
  }
  return basis;
}

/// Canonical basis of the row space: the nonzero rows of the RREF.
inline Mat row_space_basis(const Mat& a) {
  Mat r = a;
  const auto pivots = rref_in_place(r);
  Mat basis(0, a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.append_row(r.row(i));
  return basis;
}

/// Membership test against a matrix already in RREF (as from row_space_basis).
inline bool in_row_space(const Mat& rref, const Element& v) {
  if (rref.rows() > 0 && v.size() != rref.cols()) throw ShapeError("vector length mismatch");
  Element res = v;
  for (std::size_t row = 0; row < rref.rows(); ++row) {
    std::size_t c = 0;
    while (c < rref.cols() && rref(row, c) == 0) ++c;  // leading 1 of this row
    if (c == rref.cols()) break;
    if (res[c] != 0) {
      const Rational f = res[c];
      for (std::size_t j = c; j < res.size(); ++j) res[j] -= f * rref(row, j);
    }
  }
  for (const auto& q : res)
    if (q != 0) return false;
  return true;
}

inline bool same_row_space(const Mat& a, const Mat& b) {
  return row_space_basis(a) == row_space_basis(b);
}

}  // namespace volterra
