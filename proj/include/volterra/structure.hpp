#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/errors.hpp"

namespace volterra {

/// Complete directed graph on the index set; beats(k,i) means the edge k -> i.
class Tournament {
 public:
  Tournament(int dim, std::vector<std::vector<bool>> beats) : dim_(dim), beats_(std::move(beats)) {
    if (static_cast<int>(beats_.size()) != dim_) throw ShapeError("tournament matrix size mismatch");
    for (int k = 0; k < dim_; ++k) {
      if (static_cast<int>(beats_[k].size()) != dim_) throw ShapeError("tournament matrix size mismatch");
      if (beats_[k][k]) throw ShapeError("tournament has a self-loop");
      for (int i = 0; i < dim_; ++i)
        if (i != k && beats_[k][i] == beats_[i][k])
          throw ShapeError("tournament orientation invalid between " + std::to_string(k + 1) +
                           " and " + std::to_string(i + 1));
    }
  }

  int dim() const { return dim_; }
  bool beats(int k, int i) const { return beats_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }

  std::vector<int> out_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(dim_), 0);
    for (int k = 0; k < dim_; ++k)
      for (int i = 0; i < dim_; ++i)
        if (beats(k, i)) ++deg[static_cast<std::size_t>(k)];
    return deg;
  }

  bool operator==(const Tournament&) const = default;

 private:
  int dim_ = 0;
  std::vector<std::vector<bool>> beats_;
};

struct AssocWitness {
  int i, j, k;  // 0-based basis triple
  Element lhs;  // e_i o (e_j o e_k)
  Element rhs;  // (e_i o e_j) o e_k
};

struct AssociativityReport {
  bool direct = false;
  bool by_theorem = false;
  std::optional<bool> by_tournament;  // present when the algebra is extremal
  std::vector<AssocWitness> witnesses;

  bool associative() const { return direct; }
};

inline constexpr int kDefaultWitnessCap = 10;

/// Checks e_i o (e_j o e_k) = (e_i o e_j) o e_k on all basis triples.
inline bool is_associative_direct(const AlgebraSpec& a, std::vector<AssocWitness>* witnesses = nullptr,
                                  int witness_cap = kDefaultWitnessCap) {
  const int m = a.dim();
  std::vector<Element> basis;
  basis.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis.push_back(basis_element(m, i));

  bool ok = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        Element lhs = a.multiply(basis[static_cast<std::size_t>(i)],
                                 a.multiply(basis[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(k)]));
        Element rhs = a.multiply(a.multiply(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]),
                                 basis[static_cast<std::size_t>(k)]);
        if (lhs != rhs) {
          ok = false;
          if (!witnesses) return false;
          if (static_cast<int>(witnesses->size()) < witness_cap)
            witnesses->push_back({i, j, k, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  return ok;
}

/// Coefficient criterion: all p_{ij,i} in {0,1} and, for every triple of
/// distinct indices, p_{jk,j} p_{ij,i} + p_{jk,k} p_{ik,i} = p_{ij,i} p_{ik,i}.
inline bool is_associative_theorem(const AlgebraSpec& a) {
  const int m = a.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a.p(i, j) != 0 && a.p(i, j) != 1) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (i == j || j == k || k == i) continue;
        // p_{jk,j} = p(j,k), p_{jk,k} = p(k,j), p_{ij,i} = p(i,j), p_{ik,i} = p(i,k)
        if (a.p(j, k) * a.p(i, j) + a.p(k, j) * a.p(i, k) != a.p(i, j) * a.p(i, k)) return false;
      }
    }
  }
  return true;
}

/// Asserts the equivalence of the two triple identities under the
/// complement relations; returns whether they agree (they always should).
inline bool check_lemma_pp0(const Rational& p_jkj, const Rational& p_iji, const Rational& p_jkk,
                            const Rational& p_iki, const Rational& p_ijj, const Rational& p_ikk) {
  if (p_jkj + p_jkk != 1 || p_iji + p_ijj != 1 || p_iki + p_ikk != 1)
    throw ComplementError("inputs violate the Volterra complement relations");
  const bool first = p_jkj * p_iji + p_jkk * p_iki == p_iji * p_iki;
  const bool second = p_iji * p_ikk + p_ijj * p_jkk == p_jkk * p_ikk;
  return first == second;
}

/// Orientation rule: edge k -> i iff a[k][i] < 0. Undefined on zero entries.
inline Tournament build_tournament(const SkewMatrix& s) {
  const int m = s.dim();
  std::vector<std::pair<int, int>> zeros;
  for (int k = 0; k < m; ++k)
    for (int i = k + 1; i < m; ++i)
      if (s.at(k, i) == 0) zeros.emplace_back(k + 1, i + 1);
  if (!zeros.empty()) {
    std::string msg = "tournament undefined: zero skew entries at";
    for (auto [x, y] : zeros) msg += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    throw ZeroEntryError(msg, std::move(zeros));
  }
  std::vector<std::vector<bool>> beats(static_cast<std::size_t>(m),
                                       std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (i != k && s.at(k, i) < 0) beats[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = true;
  return Tournament(m, std::move(beats));
}

inline bool is_extremal(const SkewMatrix& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int k = 0; k < s.dim(); ++k)
      if (i != k && abs(s.at(i, k)) != 1) return false;
  return true;
}

/// First cyclic triple (i,j,k) with i->j->k->i, if any.
inline std::optional<std::array<int, 3>> has_cyclic_triple(const Tournament& t) {
  const int m = t.dim();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        if (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) return std::array<int, 3>{a, b, c};
        if (t.beats(a, c) && t.beats(c, b) && t.beats(b, a)) return std::array<int, 3>{a, c, b};
      }
    }
  }
  return std::nullopt;
}

/// Tournament criterion: associative iff extremal with no cyclic triple.
/// Non-extremal algebras are simply not associative under this criterion.
inline bool is_associative_tournament(const AlgebraSpec& a) {
  const SkewMatrix s = a.to_skew();
  if (!is_extremal(s)) return false;
  return !has_cyclic_triple(build_tournament(s)).has_value();
}

inline AssociativityReport associativity_report(const AlgebraSpec& a, int witness_cap = kDefaultWitnessCap) {
  AssociativityReport rep;
  rep.direct = is_associative_direct(a, &rep.witnesses, witness_cap);
  rep.by_theorem = is_associative_theorem(a);
  const SkewMatrix s = a.to_skew();
  if (is_extremal(s)) rep.by_tournament = !has_cyclic_triple(build_tournament(s)).has_value();
  return rep;
}

/// The associative model algebra: p_{ij,i} = 1 when i >= j, else 0.
inline AlgebraSpec canonical_associative(int m) {
  if (m < 1) throw DimensionError("dimension must be positive");
  std::vector<std::vector<Rational>> p(static_cast<std::size_t>(m),
                                       std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i >= j) ? 1 : 0;
  return AlgebraSpec::from_coeffs(std::move(p));
}

inline constexpr int kIsomorphismDimCap = 8;

/// Brute-force vertex bijection search with out-degree pruning; returns a
/// permutation sigma with t1.beats(k,i) iff t2.beats(sigma[k],sigma[i]).
inline std::optional<std::vector<int>> tournaments_isomorphic(const Tournament& t1, const Tournament& t2,
                                                              int cap = kIsomorphismDimCap) {
  if (t1.dim() != t2.dim()) throw ShapeError("tournaments have different orders");
  const int m = t1.dim();
  if (m > cap) throw CapacityError("tournament order " + std::to_string(m) + " exceeds cap " + std::to_string(cap));

  const auto d1 = t1.out_degrees(), d2 = t2.out_degrees();
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<int> sigma(static_cast<std::size_t>(m), -1);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  auto search = [&](auto&& self, int v) -> bool {
    if (v == m) return true;
    for (int w = 0; w < m; ++w) {
      if (used[static_cast<std::size_t>(w)] || d1[static_cast<std::size_t>(v)] != d2[static_cast<std::size_t>(w)])
        continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        const int wu = sigma[static_cast<std::size_t>(u)];
        if (t1.beats(v, u) != t2.beats(w, wu) || t1.beats(u, v) != t2.beats(wu, w)) consistent = false;
      }
      if (!consistent) continue;
      sigma[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      sigma[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (search(search, 0)) return sigma;
  return std::nullopt;
}

}  // namespace volterra
