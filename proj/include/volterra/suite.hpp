#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/characters.hpp"
#include "volterra/derivations.hpp"
#include "volterra/local.hpp"
#include "volterra/parallel.hpp"
#include "volterra/structure.hpp"

namespace volterra {

enum class Suite { Characters, Associativity, Derivations, Local };

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Characters: return "characters";
    case Suite::Associativity: return "associativity";
    case Suite::Derivations: return "derivations";
    case Suite::Local: return "local";
  }
  return "?";
}

struct CorpusDescriptor {
  std::string mode;  // random | extremal-exhaustive | grid-3d
  int dim = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<Rational> grid;
  bool exclude_half = false;
};

/// Outcome of running one suite over a corpus. Witnesses describe theorem
/// violations and must be empty; the exit-code contract hangs off ok().
struct SweepReport {
  std::string suite;
  CorpusDescriptor descriptor;
  std::size_t algebras = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // one row per algebra, corpus order
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> witnesses;

  bool ok() const { return witnesses.empty(); }
};

namespace detail {

struct AlgebraResult {
  std::vector<std::string> row;
  std::vector<std::string> witnesses;
  std::map<std::string, std::size_t> counts;
};

inline void count(AlgebraResult& r, const std::string& key) { ++r.counts[key]; }

inline AlgebraResult run_characters_checks(const AlgebraSpec& a, std::size_t index) {
  AlgebraResult res;
  if (a.dim() > kCharacterEnumerationCap)
    throw CapacityError("characters suite capped at dimension " + std::to_string(kCharacterEnumerationCap));
  std::size_t nontrivial = 0;
  const std::uint32_t full = (1u << a.dim()) - 1u;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const auto subset = detail::mask_to_subset(mask, a.dim());
    const bool theorem = is_character(a, subset);
    const bool brute = verify_character_bruteforce(a, subset);
    if (theorem != brute) {
      std::string s = "algebra " + std::to_string(index + 1) + " subset {";
      for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i] + 1);
      s += "}: criterion=" + std::string(theorem ? "true" : "false") +
           " bruteforce=" + std::string(brute ? "true" : "false");
      res.witnesses.push_back(std::move(s));
    }
    if (theorem && mask != 0 && mask != full) ++nontrivial;
  }
  res.row = {std::to_string(index + 1), std::to_string(nontrivial)};
  if (nontrivial > 0) count(res, "algebras_with_nontrivial_characters");
  return res;
}

inline AlgebraResult run_associativity_checks(const AlgebraSpec& a, std::size_t index) {
  AlgebraResult res;
  const bool direct = is_associative_direct(a);
  const bool theorem = is_associative_theorem(a);
  if (direct != theorem)
    res.witnesses.push_back("algebra " + std::to_string(index + 1) + ": direct=" +
                            (direct ? "true" : "false") + " criterion=" + (theorem ? "true" : "false"));
  const SkewMatrix s = a.to_skew();
  const bool extremal = is_extremal(s);
  std::string cyclic = "-";
  if (extremal) {
    const Tournament t = build_tournament(s);
    const bool has_cycle = has_cyclic_triple(t).has_value();
    cyclic = has_cycle ? "yes" : "no";
    if (has_cycle) count(res, "with_cyclic_triple");
    const bool by_tournament = !has_cycle;
    if (by_tournament != direct)
      res.witnesses.push_back("algebra " + std::to_string(index + 1) +
                              ": tournament criterion disagrees with direct check");
    if (direct) {
      // transitive tournaments of one order are unique up to relabeling
      const Tournament canon = build_tournament(canonical_associative(a.dim()).to_skew());
      if (!tournaments_isomorphic(t, canon).has_value())
        res.witnesses.push_back("algebra " + std::to_string(index + 1) +
                                ": associative but tournament not isomorphic to the transitive one");
      else
        count(res, "isomorphic_to_canonical");
    }
  }
  if (direct) {
    count(res, "associative");
    // associative and commutative algebras admit only the trivial derivation
    if (derivation_space(a).dim() != 0)
      res.witnesses.push_back("algebra " + std::to_string(index + 1) +
                              ": associative but has a nontrivial derivation");
  }
  if (extremal) count(res, "extremal");
  res.row = {std::to_string(index + 1), direct ? "true" : "false", theorem ? "true" : "false",
             extremal ? "true" : "false", cyclic};
  return res;
}

inline AlgebraResult run_derivations_checks(const AlgebraSpec& a, std::size_t index) {
  AlgebraResult res;
  const DerivationSpace space = derivation_space(a);
  for (const auto& d : space.basis) {
    if (!verify_derivation(a, d)) {
      res.witnesses.push_back("algebra " + std::to_string(index + 1) +
                              ": solver basis element fails the Leibniz identity");
      break;
    }
  }
  for (const auto& d : space.basis) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      Rational sum(0);
      for (std::size_t j = 0; j < d.cols(); ++j) sum += d(i, j);
      if (sum != 0) {
        res.witnesses.push_back("algebra " + std::to_string(index + 1) + ": derivation row " +
                                std::to_string(i + 1) + " sums to " + to_string(sum));
      }
    }
  }
  if (!check_support_lemma(a, space))
    res.witnesses.push_back("algebra " + std::to_string(index + 1) + ": support pattern violated");

  std::string condition = "-";
  if (a.dim() == 3) {
    const bool cond = exists_nontrivial_derivation_3d(a);
    condition = cond ? "true" : "false";
    if (cond != (space.dim() >= 1))
      res.witnesses.push_back("algebra " + std::to_string(index + 1) + ": criterion says " + condition +
                              " but dim_space=" + std::to_string(space.dim()));
  }
  count(res, "dim_space=" + std::to_string(space.dim()));
  res.row = {std::to_string(index + 1)};
  if (a.dim() == 3) {
    res.row.push_back(to_string(a.p(0, 1)));
    res.row.push_back(to_string(a.p(0, 2)));
    res.row.push_back(to_string(a.p(1, 2)));
  }
  res.row.push_back(condition);
  res.row.push_back(std::to_string(space.dim()));
  return res;
}

inline AlgebraResult run_local_checks(const AlgebraSpec& a, std::size_t index) {
  AlgebraResult res;
  const DerivationSpace ders = derivation_space(a);
  const LocalCandidateSpace cand = detail::candidate_space_from(a, ders);
  const bool equal = local_equals_derivation(a);
  if (!equal)
    res.witnesses.push_back("algebra " + std::to_string(index + 1) +
                            ": local candidate space differs from the derivation space");
  else
    count(res, "equal");
  res.row = {std::to_string(index + 1), std::to_string(ders.dim()), std::to_string(cand.dim()),
             equal ? "true" : "false"};
  return res;
}

}  // namespace detail

/// Runs one theorem suite over a corpus, in parallel, with results merged in
/// corpus order. The report's witness list is the violation log.
inline SweepReport run_suite(Suite suite, const std::vector<AlgebraSpec>& corpus,
                             CorpusDescriptor descriptor = {}) {
  SweepReport report;
  report.suite = suite_name(suite);
  report.descriptor = std::move(descriptor);
  report.algebras = corpus.size();
  switch (suite) {
    case Suite::Characters: report.columns = {"algebra", "nontrivial_characters"}; break;
    case Suite::Associativity: report.columns = {"algebra", "direct", "criterion", "extremal", "cyclic_triple"}; break;
    case Suite::Derivations:
      report.columns = (!corpus.empty() && corpus.front().dim() == 3)
                           ? std::vector<std::string>{"algebra", "p12_1", "p13_1", "p23_2", "condition", "dim_space"}
                           : std::vector<std::string>{"algebra", "condition", "dim_space"};
      break;
    case Suite::Local: report.columns = {"algebra", "derivation_dim", "candidate_dim", "equal"}; break;
  }

  std::vector<detail::AlgebraResult> results(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    switch (suite) {
      case Suite::Characters: results[i] = detail::run_characters_checks(corpus[i], i); break;
      case Suite::Associativity: results[i] = detail::run_associativity_checks(corpus[i], i); break;
      case Suite::Derivations: results[i] = detail::run_derivations_checks(corpus[i], i); break;
      case Suite::Local: results[i] = detail::run_local_checks(corpus[i], i); break;
    }
  });
  for (auto& r : results) {
    report.rows.push_back(std::move(r.row));
    for (auto& w : r.witnesses) report.witnesses.push_back(std::move(w));
    for (const auto& [k, v] : r.counts) report.counts[k] += v;
  }
  return report;
}

}  // namespace volterra
