#pragma once

#include "orbital/rootsys.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace orbital {

/// Sorted indices into RootSystem::positive().
using RootSet = std::vector<std::size_t>;

/// Φ⁺(a): positive roots vanishing on a.
struct AnnihilatorSet {
  LieType type;
  RootSet roots;
  ChamberPoint source_point;

  bool regular() const { return roots.empty(); }
};

/// Exact zero test over Φ⁺. The point need not be dominant. Throws
/// NormalizerElement when every root annihilates a.
AnnihilatorSet annihilator(const ChamberPoint& a, LieType type);

struct Witness {
  enum class Kind { OMIT_INDEX, SIGN_VECTOR, INDEX_SPLIT };
  Kind kind = Kind::OMIT_INDEX;
  int omitted = 0;          // 1-based, OMIT_INDEX
  std::vector<int> signs;   // SIGN_VECTOR: one per coordinate; INDEX_SPLIT: one per entry of J
  std::vector<int> I, J;    // 1-based, INDEX_SPLIT

  /// The vector whose orthogonal complement cuts out the subsystem.
  VectorXq normal(const RootSystem& rs) const;
};

std::string to_string(Witness::Kind k);

struct SubsystemDescriptor {
  LieType ambient;
  RootSet roots;
  /// Irreducible factors, e.g. {BC1, A1}; empty for the trivial subsystem.
  std::vector<LieType> components;
  Witness witness;

  /// "BC1×A1", or "trivial".
  std::string type_name() const;
};

/// Maximal proper subsystems of the form Φ ∩ V, in enumeration order
/// (a) omitted index, (b) sign vectors, (c) index splits. Throws Unsupported
/// for exceptional families.
std::vector<SubsystemDescriptor> maximal_subsystems(LieType type);

/// First enumerated maximal subsystem containing ann.roots.
SubsystemDescriptor containing_maximal(const AnnihilatorSet& ann);

/// Φ⁺ ∩ span_Q(S).
RootSet span_closure(LieType type, const RootSet& s);

/// Positive part of the closure of ±S under α,β ↦ α+β whenever α+β ∈ Φ.
RootSet additive_closure(LieType type, const RootSet& s);

/// S is span-closed, proper, and adjoining any further positive root
/// closes up to all of Φ⁺.
bool is_maximal(LieType type, const RootSet& s);

/// Dimension of span_Q(S).
int span_rank(LieType type, const RootSet& s);

}  // namespace orbital
