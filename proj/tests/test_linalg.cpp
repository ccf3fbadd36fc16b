#include <catch_amalgamated.hpp>

#include <random>

#include "volterra/linalg.hpp"

using namespace volterra;

namespace {

Mat random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
  return m;
}

Element matvec(const Mat& a, const Element& v) {
  Element out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace

TEST_CASE("rref basics") {
  Mat a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  const auto pivots = rref_in_place(a);
  REQUIRE(pivots == std::vector<std::size_t>{0});
  REQUIRE(a(0, 0) == 1);
  REQUIRE(a(0, 1) == 2);
  REQUIRE(a(1, 0) == 0);
  REQUIRE(a(1, 2) == 0);

  REQUIRE(rank(Mat::identity(4)) == 4);
  REQUIRE(rank(Mat(3, 3)) == 0);
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 8;
    const Mat a = random_matrix(r, c, rng);
    const Mat ns = nullspace_basis(a);
    REQUIRE(ns.rows() == c - rank(a));
    for (std::size_t b = 0; b < ns.rows(); ++b) {
      const Element v = ns.row(b);
      for (const auto& coord : matvec(a, v)) REQUIRE(coord == 0);
    }
    // basis rows are independent: each has a unit in its own free column
    REQUIRE(rank(ns) == ns.rows());
  }
}

TEST_CASE("row space membership") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 2 + rng() % 6;
    const Mat a = random_matrix(r, c, rng);
    const Mat basis = row_space_basis(a);
    REQUIRE(basis.rows() == rank(a));

    // random combinations of rows stay inside
    Element comb(c, Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Rational coeff = rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
      for (std::size_t j = 0; j < c; ++j) comb[j] += coeff * a(i, j);
    }
    REQUIRE(in_row_space(basis, comb));

    if (basis.rows() < c) {
      // push the combination outside along a unit vector that is not spanned
      Element outside = comb;
      for (std::size_t cc = 0; cc < c; ++cc) {
        Element unit(c, Rational(0));
        unit[cc] = 1;
        if (!in_row_space(basis, unit)) {
          outside[cc] += 1;
          break;
        }
      }
      REQUIRE_FALSE(in_row_space(basis, outside));
    }
  }
}

TEST_CASE("same row space is representation independent") {
  Mat a(2, 3), b(2, 3);
  a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 0;
  a(1, 0) = 0; a(1, 1) = 1; a(1, 2) = 1;
  // b spans the same plane with different generators
  b(0, 0) = 1; b(0, 1) = 2; b(0, 2) = 1;
  b(1, 0) = 2; b(1, 1) = 3; b(1, 2) = 1;
  REQUIRE(same_row_space(a, b));
  b(1, 2) = 2;
  REQUIRE_FALSE(same_row_space(a, b));
}
