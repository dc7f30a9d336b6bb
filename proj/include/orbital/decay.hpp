#pragma once

#include "orbital/catalog.hpp"
#include "orbital/rootsys.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbital {

/// |U_{λ,j}| = #{α ∈ S_j : ⟨λ,α⟩ ≥ c_G‖λ‖}, indexed by MultClass.
struct CountProfile {
  Rational cG;
  std::array<int, kMultClasses> counts{};
  ChamberPoint lambda;

  int operator[](MultClass c) const { return counts[static_cast<int>(c)]; }
  int total() const;
  /// Σ_j m_j |U_{λ,j}|.
  int weighted(const SpaceDescriptor& s) const;
};

/// Throws InvalidArgument for λ = 0 or λ outside the closed chamber.
CountProfile u_counts(const ChamberPoint& lambda, LieType type, Rational cG);

/// 1 for A, D and exceptional types (fundamental-weight basis), 1/2 for B, C, BC.
Rational default_cg(LieType type);
/// Basis the counting argument uses for the type.
Basis default_basis(LieType type);

/// ϱ from the regular-element counting lemma. Classical only; throws
/// InvalidArgument for exceptional types.
int rho_formula(const SpaceDescriptor& s);

/// The B/C/BC count before it is weakened to the closed form:
/// min(2η₀(n−1)+η₁+η₂, η₀(2n−3)+2(η₁+η₂)). Equals rho_formula elsewhere.
int rho_sharp(const SpaceDescriptor& s);

/// Cited minimal |U| for exceptional types. One entry for a single
/// multiplicity; (long, short) = (9, 6) for two-multiplicity F4.
std::vector<int> exceptional_mincount(const SpaceDescriptor& s);

/// Minimum over fundamental weights of per-class counts (c_G = 1), for
/// checking the cited constants. Returns (EXC_0, EXC_1) counts at the
/// minimizing weight for each weight.
std::vector<std::array<int, 2>> fundamental_weight_counts(LieType type);

/// ϱ for any descriptor: rho_formula for classical types, the weighted
/// exceptional counts otherwise. For two-multiplicity F4 the minimum over both
/// long/short attachments of (9, 6) is used.
int rho(const SpaceDescriptor& s);

struct RhoOracleResult {
  int formula = 0;
  int sharp = 0;
  int minimum = 0;
  ChamberPoint argmin;
  std::size_t probes = 0;
  bool bound_holds = true;   // no probe below the formula
  bool attained = false;     // minimum == formula
  std::optional<ChamberPoint> violation;
};

/// Deterministic probe scan: fundamental weights, all 0/1 combinations of
/// them, and `random_probes` random rational chamber points.
RhoOracleResult rho_oracle_scan(const SpaceDescriptor& s, Rational cG, std::uint64_t seed = 20240601,
                                std::size_t random_probes = 10000);

/// Returns the probe minimum; throws VerificationFailure (with the witness
/// point) if a probe falls below rho_formula or the minimum is not attained.
int rho_oracle(const SpaceDescriptor& s, Rational cG, std::uint64_t seed = 20240601,
               std::size_t random_probes = 10000);

/// log P_{G/K}(λ,k,a) = max over W of the two-product expression.
/// Throws NormalizerElement when a ∉ A₀, Unsupported for E types.
double log_p_bound(const ChamberPoint& lambda, int k, const ChamberPoint& a, const SpaceDescriptor& s);
double p_bound(const ChamberPoint& lambda, int k, const ChamberPoint& a, const SpaceDescriptor& s);

/// Product-bound exponent p_k for A and D types (k ≥ rank for A_n, k ≥ n−1 for D_n).
std::optional<int> p_k(const SpaceDescriptor& s, int k);

/// κ_n = 2(n−1)+(η₁+η₂)/η₀ for B/C/BC with n ≥ 3.
std::optional<Rational> kappa_n(const SpaceDescriptor& s);
/// κ₂ = 1+M/(2m), m = min(η₀, η₁+η₂), M = max(η₀, η₁+η₂), for rank-2 B/C/BC.
std::optional<Rational> kappa_2(const SpaceDescriptor& s);

/// Exponent s of the maximal-subsystem product bound (E_n: 1/(n−1), F4: 1/5,
/// G2: 2/5, A_{n−1}/D_n: 1/(n−1)).
std::optional<Rational> group_exponent_s(const SpaceDescriptor& s);

struct Gate {
  Rational value;
  bool strict = true;  // k > value (classical) or k ≥ value (exceptional)
  std::string rule;

  bool admits(int k) const { return strict ? Rational(k) > value : Rational(k) >= value; }
  /// Smallest admitted integer k.
  int min_k() const;
};

Gate k_gate(const SpaceDescriptor& s);

int regular_threshold(const SpaceDescriptor& s);

enum class Verdict { IN_L2, NOT_IN_L2, UNDECIDED };
std::string to_string(Verdict v);

struct L2Result {
  Verdict verdict = Verdict::UNDECIDED;
  std::string rule;
};

/// Throws InvalidArgument for k < 1.
L2Result l2_gate(const SpaceDescriptor& s, int k, bool regular);

struct QExponent {
  Rational value;
  std::string rule;
};

/// Exponent q(j) with |φ_λ(a)^j c(λ)^{-1}|² ≤ C min(1,‖λ‖^{q(j)}), when a
/// rule covers (s, j, regular).
std::optional<QExponent> q_exponent(const SpaceDescriptor& s, int j, bool regular);

struct DiffResult {
  int order = 0;
  std::string rule;
};

/// Largest r ≥ 0 with n−1+q(k/2)+r < −1 (0 when no exponent is available).
/// Throws InvalidArgument for odd or nonpositive k.
DiffResult diff_order(const SpaceDescriptor& s, int k, bool regular);

/// Closed-form first-derivative criteria: A_n with any a ∈ A₀:
/// k > 2n+2(n+1)/η₀; regular a off (AI, A₁): k > 4. Empty when neither applies.
std::optional<bool> diff_fast_path(const SpaceDescriptor& s, int k, bool regular);

struct DecayReport {
  SpaceDescriptor space;
  int k = 0;
  bool regular = false;
  std::optional<int> rho, rho_sharp, p_k;
  std::optional<Rational> kappa, kappa2, s, m, M, q;
  Gate k_gate;
  int regular_threshold = 2;
  L2Result l2;
  std::optional<DiffResult> diff;
  std::vector<std::string> rules_applied;
};

DecayReport decay_report(const SpaceDescriptor& s, int k, bool regular);

}  // namespace orbital
