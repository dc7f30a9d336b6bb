#include "orbital/verify.hpp"

#include "orbital/error.hpp"
#include "orbital/rank1.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace orbital {

std::set<RootSet> brute_force_maximal(LieType type) {
  const std::size_t n = positive_roots(type).size();
  if (n > 24) throw InvalidArgument("brute_force_maximal: too many positive roots for " + to_string(type));
  std::vector<RootSet> closed;
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    RootSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (span_closure(type, s) == s) closed.push_back(std::move(s));
  }
  std::set<RootSet> maximal;
  for (const auto& s : closed) {
    const bool dominated = std::any_of(closed.begin(), closed.end(), [&](const RootSet& o) {
      return o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end());
    });
    if (!dominated) maximal.insert(s);
  }
  return maximal;
}

std::vector<LieType> classical_types(int max_rank) {
  std::vector<LieType> out;
  for (const auto& s : all_spaces(max_rank))
    if (s.lie_type.classical() && std::find(out.begin(), out.end(), s.lie_type) == out.end())
      out.push_back(s.lie_type);
  return out;
}

CheckResult check_dimensions(int max_rank) {
  CheckResult r{"catalog dimension identity", true, ""};
  int rows = 0;
  for (const auto& s : all_spaces(max_rank)) {
    ++rows;
    const int d = dimension_from_roots(s);
    if (d != s.dim_gk) {
      r.passed = false;
      r.detail += s.label() + ": dim " + std::to_string(s.dim_gk) + " but rank+Σm = " + std::to_string(d) + "; ";
    }
  }
  if (r.passed) r.detail = std::to_string(rows) + " descriptors";
  return r;
}

CheckResult check_subsystems(int max_rank, std::uint64_t seed, int samples) {
  CheckResult r{"maximal subsystem suite", true, ""};
  std::ostringstream os;
  const auto bc2 = maximal_subsystems({Family::BC, 2});
  if (bc2.size() != 4) {
    r.passed = false;
    os << "BC2 lists " << bc2.size() << " maximal subsystems; ";
  }
  const auto types = classical_types(max_rank);
  for (const auto& t : types) {
    std::set<RootSet> listed;
    for (const auto& s : maximal_subsystems(t)) listed.insert(s.roots);
    const auto brute = brute_force_maximal(t);
    if (brute != listed) {
      r.passed = false;
      os << to_string(t) << ": brute force " << brute.size() << " vs listed " << listed.size() << "; ";
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  int tested = 0;
  while (tested < samples) {
    const LieType t = types[pick(rng)];
    ChamberPoint a;
    a.coords.resize(root_system(t).ambient_dim());
    for (Eigen::Index i = 0; i < a.coords.size(); ++i) a.coords(i) = coord(rng);
    try {
      const auto ann = annihilator(a, t);
      const auto s = containing_maximal(ann);
      if (!std::includes(s.roots.begin(), s.roots.end(), ann.roots.begin(), ann.roots.end())) {
        r.passed = false;
        os << to_string(t) << ": annihilator not contained in " << s.type_name() << "; ";
      }
      ++tested;
    } catch (const NormalizerElement&) {
      // every root vanishes; draw again
    }
  }
  r.detail = r.passed ? std::to_string(types.size()) + " types brute-forced, " + std::to_string(tested) +
                            " random annihilators"
                      : os.str();
  return r;
}

CheckResult check_rank1_grid() {
  CheckResult r{"rank-1 oracle agreement", true, ""};
  double worst = 0, wl = 0, wt = 0;
  for (double l : {0.0, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0})
    for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      const double d = std::abs(phi_rank1(l, t) - phi_rank1_oracle(l, t));
      if (d > worst) worst = d, wl = l, wt = t;
    }
  r.passed = worst < 1e-8;
  std::ostringstream os;
  os << "max |Δφ| = " << worst << " at (λ, t) = (" << wl << ", " << wt << ")";
  r.detail = os.str();
  return r;
}

CheckResult check_divergence(double t) {
  CheckResult r{"divergence classification", true, ""};
  std::ostringstream os;
  try {
    const auto f2 = classify_divergence(2, t);
    const auto f3 = classify_divergence(3, t);
    r.passed = f2.verdict == DivergenceVerdict::LOG_DIVERGENT && f3.verdict == DivergenceVerdict::CONVERGENT;
    os << "k=2 " << to_string(f2.verdict) << " (slope " << f2.slope << ", residual " << f2.residual << "); k=3 "
       << to_string(f3.verdict) << " (max ratio "
       << *std::max_element(f3.increment_ratios.begin(), f3.increment_ratios.end()) << ")";
  } catch (const InconclusiveFit& e) {
    r.passed = false;
    os << e.what();
  }
  r.detail = os.str();
  return r;
}

}  // namespace orbital
