// Command-line front end: one subcommand per analysis, JSON/CSV/text output,
// 1-based indices everywhere user-facing.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "volterra/volterra.hpp"

namespace {

using nlohmann::json;
using namespace volterra;

json subset_to_json(const std::vector<int>& subset) {
  json out = json::array();
  for (int i : subset) out.push_back(i + 1);
  return out;
}

json element_to_json(const Element& x) {
  json out = json::array();
  for (const auto& c : x) out.push_back(rational_to_json(c));
  return out;
}

void emit(const json& j, const std::string& output) {
  if (output == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";  // text falls back to pretty JSON for record outputs
  }
}

void print_report(const SweepReport& rep, const std::string& output) {
  if (output == "json") {
    json j;
    j["suite"] = rep.suite;
    j["mode"] = rep.descriptor.mode;
    j["dim"] = rep.descriptor.dim;
    j["seed"] = rep.descriptor.seed;
    j["algebras"] = rep.algebras;
    j["counts"] = json::object();
    for (const auto& [k, v] : rep.counts) j["counts"][k] = v;
    j["rows"] = json::array();
    for (const auto& row : rep.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < rep.columns.size() && c < row.size(); ++c) obj[rep.columns[c]] = row[c];
      j["rows"].push_back(std::move(obj));
    }
    j["witnesses"] = rep.witnesses;
    j["ok"] = rep.ok();
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (output == "csv") {
    for (std::size_t c = 0; c < rep.columns.size(); ++c) std::cout << (c ? "," : "") << rep.columns[c];
    std::cout << "\n";
    for (const auto& row : rep.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
      std::cout << "\n";
    }
    for (const auto& w : rep.witnesses) std::cout << "# WITNESS " << w << "\n";
    return;
  }
  std::cout << "suite: " << rep.suite << " (" << rep.algebras << " algebras, mode " << rep.descriptor.mode
            << ")\n";
  for (const auto& [k, v] : rep.counts) std::cout << "  " << k << ": " << v << "\n";
  if (rep.ok()) {
    std::cout << "  no violations\n";
  } else {
    std::cout << "  VIOLATIONS (" << rep.witnesses.size() << "):\n";
    for (const auto& w : rep.witnesses) std::cout << "    " << w << "\n";
  }
}

std::vector<Rational> parse_grid(const std::string& csv) {
  std::vector<Rational> values;
  for (const auto& q : parse_element(csv)) values.push_back(q);
  return values;
}

int run(int argc, char** argv) {
  CLI::App app{"genetic Volterra algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --output after the subcommand's own options
  std::string output = "json";
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  // canonical
  auto* cmd_canonical = app.add_subcommand("canonical", "emit the canonical associative algebra");
  int canon_dim = 3;
  std::string canon_out;
  cmd_canonical->add_option("--dim", canon_dim, "dimension")->required();
  cmd_canonical->add_option("--out", canon_out, "write to file instead of stdout");

  // characters
  auto* cmd_characters = app.add_subcommand("characters", "enumerate character subsets");
  std::string char_file;
  bool include_trivial = false;
  cmd_characters->add_option("--algebra", char_file, "algebra JSON file")->required();
  cmd_characters->add_flag("--include-trivial", include_trivial, "also report {} and the full set");

  // associativity
  auto* cmd_assoc = app.add_subcommand("associativity", "associativity report");
  std::string assoc_file;
  cmd_assoc->add_option("--algebra", assoc_file, "algebra JSON file")->required();

  // tournament
  auto* cmd_tournament = app.add_subcommand("tournament", "tournament of the skew representation");
  std::string tour_file;
  cmd_tournament->add_option("--algebra", tour_file, "algebra JSON file")->required();

  // derivations
  auto* cmd_derivations = app.add_subcommand("derivations", "derivation space basis");
  std::string der_file;
  cmd_derivations->add_option("--algebra", der_file, "algebra JSON file")->required();

  // local-check
  auto* cmd_local = app.add_subcommand("local-check", "compare local candidates with derivations (dim 3)");
  std::string local_file;
  cmd_local->add_option("--algebra", local_file, "algebra JSON file")->required();

  // probe-conjecture
  auto* cmd_probe = app.add_subcommand("probe-conjecture", "experimental local-derivation probe");
  std::string probe_file;
  std::uint64_t probe_seed = 0;
  int probe_samples = 200;
  cmd_probe->add_option("--algebra", probe_file, "algebra JSON file")->required();
  cmd_probe->add_option("--seed", probe_seed, "sampling seed")->required();
  cmd_probe->add_option("--samples", probe_samples, "number of sampled points");

  // evolve
  auto* cmd_evolve = app.add_subcommand("evolve", "trajectory of the quadratic stochastic operator");
  std::string evolve_file, x0_text;
  std::size_t evolve_steps = 100;
  bool evolve_exact_mode = false;
  cmd_evolve->add_option("--algebra", evolve_file, "algebra JSON file")->required();
  cmd_evolve->add_option("--x0", x0_text, "start point, e.g. \"1/2,1/4,1/4\"")->required();
  cmd_evolve->add_option("--steps", evolve_steps, "number of generations");
  cmd_evolve->add_flag("--exact", evolve_exact_mode, "exact rational iteration");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "run a theorem suite over a generated corpus");
  std::string sweep_suite, sweep_mode = "random", sweep_grid = "0,1/4,1/2,3/4,1";
  int sweep_dim = 3;
  std::size_t sweep_count = 100;
  std::uint64_t sweep_seed = 0;
  bool sweep_exclude_half = false;
  cmd_sweep->add_option("--suite", sweep_suite, "characters|associativity|derivations|local")
      ->required()
      ->check(CLI::IsMember({"characters", "associativity", "derivations", "local"}));
  cmd_sweep->add_option("--mode", sweep_mode, "random|extremal-exhaustive|grid-3d")
      ->check(CLI::IsMember({"random", "extremal-exhaustive", "grid-3d"}));
  cmd_sweep->add_option("--dim", sweep_dim, "dimension (random/extremal modes)");
  cmd_sweep->add_option("--count", sweep_count, "corpus size (random mode)");
  cmd_sweep->add_option("--seed", sweep_seed, "corpus seed (required for random mode)");
  cmd_sweep->add_option("--grid", sweep_grid, "grid values (grid-3d mode)");
  cmd_sweep->add_flag("--exclude-half", sweep_exclude_half, "keep coefficients away from 1/2");

  // sweep-extremal
  auto* cmd_sweep_ext = app.add_subcommand("sweep-extremal", "associativity suite over all extremal algebras");
  int sweep_ext_dim = 3;
  cmd_sweep_ext->add_option("--dim", sweep_ext_dim, "dimension")->required();

  // derivation-sweep-3d
  auto* cmd_sweep_der = app.add_subcommand("derivation-sweep-3d", "derivations suite over a coefficient grid");
  std::string der_grid = "0,1/4,1/2,3/4,1";
  cmd_sweep_der->add_option("--grid", der_grid, "grid values for (p12_1, p13_1, p23_2)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_canonical->parsed()) {
    const json j = algebra_to_json(canonical_associative(canon_dim));
    if (canon_out.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream out(canon_out);
      if (!out) throw ParseError("cannot write '" + canon_out + "'");
      out << j.dump(2) << "\n";
    }
    return 0;
  }

  if (cmd_characters->parsed()) {
    const AlgebraSpec a = load_algebra_file(char_file);
    const auto sets = enumerate_characters(a, include_trivial);
    if (output == "csv") {
      std::cout << "subset,is_trivial\n";
      for (const auto& cs : sets) {
        for (std::size_t i = 0; i < cs.subset.size(); ++i) std::cout << (i ? " " : "") << cs.subset[i] + 1;
        std::cout << "," << (cs.is_trivial ? "true" : "false") << "\n";
      }
      return 0;
    }
    json j = json::array();
    for (const auto& cs : sets) j.push_back({{"subset", subset_to_json(cs.subset)}, {"is_trivial", cs.is_trivial}});
    emit(j, output);
    return 0;
  }

  if (cmd_assoc->parsed()) {
    const AlgebraSpec a = load_algebra_file(assoc_file);
    const AssociativityReport rep = associativity_report(a);
    json j;
    j["direct"] = rep.direct;
    j["by_theorem"] = rep.by_theorem;
    if (rep.by_tournament.has_value())
      j["by_tournament"] = *rep.by_tournament;
    else
      j["by_tournament"] = nullptr;
    j["associative"] = rep.associative();
    j["witnesses"] = json::array();
    for (const auto& w : rep.witnesses)
      j["witnesses"].push_back({{"triple", {w.i + 1, w.j + 1, w.k + 1}},
                                {"lhs", element_to_json(w.lhs)},
                                {"rhs", element_to_json(w.rhs)}});
    emit(j, output);
    return 0;
  }

  if (cmd_tournament->parsed()) {
    const AlgebraSpec a = load_algebra_file(tour_file);
    const SkewMatrix s = a.to_skew();
    json j;
    j["dim"] = s.dim();
    j["extremal"] = is_extremal(s);
    j["skew"] = skew_to_json(s)["matrix"];
    const Tournament t = build_tournament(s);  // ZeroEntryError when undefined
    json beats = json::array();
    for (int k = 0; k < t.dim(); ++k) {
      json row = json::array();
      for (int i = 0; i < t.dim(); ++i) row.push_back(t.beats(k, i) ? 1 : 0);
      beats.push_back(std::move(row));
    }
    j["beats"] = std::move(beats);
    const auto cyc = has_cyclic_triple(t);
    j["transitive"] = !cyc.has_value();
    if (cyc)
      j["cyclic_triple"] = {(*cyc)[0] + 1, (*cyc)[1] + 1, (*cyc)[2] + 1};
    else
      j["cyclic_triple"] = nullptr;
    emit(j, output);
    return 0;
  }

  if (cmd_derivations->parsed()) {
    const AlgebraSpec a = load_algebra_file(der_file);
    const DerivationSpace space = derivation_space(a);
    json j;
    j["dim_space"] = space.dim();
    j["basis"] = json::array();
    for (const auto& d : space.basis) {
      json mat = json::array();
      for (std::size_t i = 0; i < d.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(rational_to_json(d(i, c)));
        mat.push_back(std::move(row));
      }
      j["basis"].push_back(std::move(mat));
    }
    emit(j, output);
    return 0;
  }

  if (cmd_local->parsed()) {
    const AlgebraSpec a = load_algebra_file(local_file);
    const DerivationSpace ders = derivation_space(a);
    const LocalCandidateSpace cand = local_candidate_space(a);
    json j;
    j["candidate_dim"] = cand.dim();
    j["derivation_dim"] = ders.dim();
    j["equal"] = local_equals_derivation(a);
    emit(j, output);
    return 0;
  }

  if (cmd_probe->parsed()) {
    const AlgebraSpec a = load_algebra_file(probe_file);
    const ProbeReport rep = probe_conjecture(a, probe_seed, probe_samples);
    json j;
    j["outcome"] = rep.outcome == ProbeOutcome::Pass          ? "PASS"
                   : rep.outcome == ProbeOutcome::Fail        ? "FAIL"
                                                              : "INCONCLUSIVE";
    j["candidate_dim"] = rep.candidate_dim;
    j["derivation_dim"] = rep.derivation_dim;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["witnesses"] = json::array();
    for (const auto& w : rep.witnesses)
      j["witnesses"].push_back({{"candidate", w.candidate_index + 1}, {"point", element_to_json(w.point)}});
    emit(j, output);
    return 0;
  }

  if (cmd_evolve->parsed()) {
    const AlgebraSpec a = load_algebra_file(evolve_file);
    const Element x0 = parse_element(x0_text);
    std::cout << "step";
    for (int k = 0; k < a.dim(); ++k) std::cout << ",x_" << k + 1;
    std::cout << "\n";
    if (evolve_exact_mode) {
      const auto traj = evolve_exact(a, SimplexPoint(x0), evolve_steps);
      for (std::size_t t = 0; t < traj.size(); ++t) {
        std::cout << t;
        for (const auto& c : traj[t].coords()) std::cout << "," << to_string(c);
        std::cout << "\n";
      }
      std::cout << "# max_drift=0 (exact)\n";
    } else {
      std::vector<double> start;
      for (const auto& c : x0) start.push_back(to_double(c));
      const Trajectory traj = evolve(a.to_skew(), start, evolve_steps);
      std::cout.precision(17);
      for (std::size_t t = 0; t < traj.points.size(); ++t) {
        std::cout << t;
        for (double c : traj.points[t]) std::cout << "," << c;
        std::cout << "\n";
      }
      std::cout << "# max_drift=" << traj.max_drift << "\n";
    }
    return 0;
  }

  SweepReport report;
  if (cmd_sweep->parsed()) {
    CorpusDescriptor desc;
    desc.mode = sweep_mode;
    desc.dim = sweep_dim;
    desc.seed = sweep_seed;
    desc.count = sweep_count;
    desc.exclude_half = sweep_exclude_half;
    std::vector<AlgebraSpec> corpus;
    if (sweep_mode == "random") {
      if (cmd_sweep->count("--seed") == 0) throw ParseError("--seed is required for random mode");
      corpus = random_corpus(sweep_dim, sweep_count, sweep_seed, {sweep_exclude_half});
    } else if (sweep_mode == "extremal-exhaustive") {
      corpus = extremal_exhaustive_corpus(sweep_dim);
    } else {
      desc.grid = parse_grid(sweep_grid);
      desc.dim = 3;
      corpus = grid_3d_corpus(desc.grid);
    }
    Suite suite = sweep_suite == "characters"      ? Suite::Characters
                  : sweep_suite == "associativity" ? Suite::Associativity
                  : sweep_suite == "derivations"   ? Suite::Derivations
                                                   : Suite::Local;
    report = run_suite(suite, corpus, desc);
  } else if (cmd_sweep_ext->parsed()) {
    CorpusDescriptor desc;
    desc.mode = "extremal-exhaustive";
    desc.dim = sweep_ext_dim;
    report = run_suite(Suite::Associativity, extremal_exhaustive_corpus(sweep_ext_dim), desc);
  } else if (cmd_sweep_der->parsed()) {
    CorpusDescriptor desc;
    desc.mode = "grid-3d";
    desc.dim = 3;
    desc.grid = parse_grid(der_grid);
    report = run_suite(Suite::Derivations, grid_3d_corpus(desc.grid), desc);
  } else {
    return 2;
  }
  print_report(report, output == "json" ? std::string("json") : output);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const volterra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
