// Small tour of the library: build an algebra, look at its characters,
// derivations and a short trajectory.

#include <iostream>

#include "volterra/volterra.hpp"

int main() {
  using namespace volterra;

  // p_{12,1} = 1/2, p_{13,1} = p_{23,2} = 1/4
  const AlgebraSpec a = AlgebraSpec::from_coeffs({
      {rat(1), rat(1, 2), rat(1, 4)},
      {rat(1, 2), rat(1), rat(1, 4)},
      {rat(3, 4), rat(3, 4), rat(1)},
  });

  std::cout << "characters (nontrivial):\n";
  for (const auto& cs : enumerate_characters(a, false)) {
    std::cout << "  {";
    for (std::size_t i = 0; i < cs.subset.size(); ++i) std::cout << (i ? "," : "") << cs.subset[i] + 1;
    std::cout << "}\n";
  }

  std::cout << "associative: " << (is_associative_direct(a) ? "yes" : "no") << "\n";

  const DerivationSpace ders = derivation_space(a);
  std::cout << "derivation space dimension: " << ders.dim() << "\n";
  std::cout << "local candidates = derivations: " << (local_equals_derivation(a) ? "yes" : "no") << "\n";

  const auto traj = evolve_exact(a, parse_simplex("1/2,1/4,1/4"), 3);
  std::cout << "trajectory:\n";
  for (const auto& pt : traj) {
    std::cout << " ";
    for (const auto& c : pt.coords()) std::cout << " " << to_string(c);
    std::cout << "\n";
  }
  return 0;
}
