#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/derivations.hpp"
#include "volterra/errors.hpp"
#include "volterra/linalg.hpp"

namespace volterra {

/// Span of the maps whose row i lies in V_i = { D(e_i) : D a derivation }.
/// Every local derivation satisfies these basis-vector constraints, so this
/// space contains the local derivations; at dimension 3 it provably equals
/// the derivation space.
struct LocalCandidateSpace {
  std::vector<LinearMap> basis;
  std::vector<Mat> per_basis_ranges;  // per_basis_ranges[i]: canonical basis of V_i (rows)
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

inline LocalCandidateSpace candidate_space_from(const AlgebraSpec& a, const DerivationSpace& ders) {
  const auto m = static_cast<std::size_t>(a.dim());
  LocalCandidateSpace out;
  out.per_basis_ranges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Mat rows(0, m);
    for (const auto& d : ders.basis) rows.append_row(d.row(i));
    out.per_basis_ranges.push_back(row_space_basis(rows));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Mat& vi = out.per_basis_ranges[i];
    for (std::size_t r = 0; r < vi.rows(); ++r) {
      LinearMap d(m, m);
      d.set_row(i, vi.row(r));
      out.basis.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace detail

inline LocalCandidateSpace local_candidate_space(const AlgebraSpec& a) {
  if (a.dim() != 3) throw DimensionError("local-derivation analysis is stated for dimension 3");
  return detail::candidate_space_from(a, derivation_space(a));
}

/// Dimension-3 theorem check: the candidate space coincides with the
/// derivation space, i.e. every local derivation is a derivation.
inline bool local_equals_derivation(const AlgebraSpec& a) {
  if (a.dim() != 3) throw DimensionError("local-derivation analysis is stated for dimension 3");
  const DerivationSpace ders = derivation_space(a);
  const LocalCandidateSpace cand = detail::candidate_space_from(a, ders);
  if (cand.dim() != ders.dim()) return false;
  for (const auto& d : cand.basis)
    if (!verify_derivation(a, d)) return false;
  return true;
}

enum class ProbeOutcome { Pass, Fail, Inconclusive };

struct ProbeWitness {
  std::size_t candidate_index;
  Element point;  // simplex point where the membership test failed
};

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::Inconclusive;
  std::size_t candidate_dim = 0;
  std::size_t derivation_dim = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ProbeWitness> witnesses;
};

inline constexpr int kProbeDenominatorBound = 97;

namespace detail {

// Interior simplex point with denominator at most the configured bound.
inline SimplexPoint sample_interior_point(int m, std::mt19937_64& rng) {
  const int lo = std::max(m, 2);
  const int den = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(kProbeDenominatorBound - lo + 1));
  std::vector<long> parts(static_cast<std::size_t>(m), 1);
  for (int extra = 0; extra < den - m; ++extra)
    ++parts[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(m))];
  Element coords(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = rat(parts[i], den);
  return SimplexPoint(std::move(coords));
}

}  // namespace detail

/// Experimental probe for dimensions above 3: builds the basis-constraint
/// candidate space and tests it against the derivation space, then samples
/// interior points to seek a witness that some candidate is not a local
/// derivation (its value escaping span{D(x)}). Pass means the two spaces
/// coincide exactly; Fail means a sampled witness was found; otherwise the
/// sampling is Inconclusive.
inline ProbeReport probe_conjecture(const AlgebraSpec& a, std::uint64_t seed, int samples = 200) {
  if (a.dim() < 3) throw DimensionError("probe applies to dimension >= 3");
  const DerivationSpace ders = derivation_space(a);  // CapacityError above the solver cap
  const LocalCandidateSpace cand = detail::candidate_space_from(a, ders);

  ProbeReport rep;
  rep.candidate_dim = cand.dim();
  rep.derivation_dim = ders.dim();
  rep.seed = seed;
  rep.samples = static_cast<std::size_t>(samples);

  if (cand.dim() == ders.dim()) {
    rep.outcome = ProbeOutcome::Pass;
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (int n = 0; n < samples; ++n) {
    const SimplexPoint x = detail::sample_interior_point(a.dim(), rng);
    Mat values(0, static_cast<std::size_t>(a.dim()));
    for (const auto& d : ders.basis) values.append_row(apply_map(d, x.coords()));
    const Mat span = row_space_basis(values);
    for (std::size_t c = 0; c < cand.basis.size(); ++c) {
      if (!in_row_space(span, apply_map(cand.basis[c], x.coords()))) {
        if (rep.witnesses.size() < 10) rep.witnesses.push_back({c, x.coords()});
      }
    }
  }
  rep.outcome = rep.witnesses.empty() ? ProbeOutcome::Inconclusive : ProbeOutcome::Fail;
  return rep;
}

}  // namespace volterra
