#pragma once

#include "orbital/catalog.hpp"
#include "orbital/subsystems.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace orbital {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Maximal proper span-closed subsets of Φ⁺ by exhaustive subset search.
/// Throws InvalidArgument when |Φ⁺| > 24.
std::set<RootSet> brute_force_maximal(LieType type);

/// Classical restricted root systems of rank ≤ max_rank that occur in the catalog.
std::vector<LieType> classical_types(int max_rank);

/// dim G/K = rank + Σ m_α for every descriptor of rank ≤ max_rank.
CheckResult check_dimensions(int max_rank);

/// BC₂ has exactly four maximal subsystems; the brute-force search agrees with
/// maximal_subsystems for classical ranks ≤ max_rank; `samples` random
/// annihilators each sit inside an enumerated maximal subsystem.
CheckResult check_subsystems(int max_rank, std::uint64_t seed, int samples);

/// |phi_rank1 − phi_rank1_oracle| < 1e−8 on λ ∈ {0,1,2,5,10,20,50,100,200} × t ∈ {0.1,0.5,1,2,3}.
CheckResult check_rank1_grid();

/// classify_divergence(2, t) is LOG_DIVERGENT and classify_divergence(3, t) CONVERGENT.
CheckResult check_divergence(double t);

}  // namespace orbital
