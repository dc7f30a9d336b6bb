#pragma once

#include "orbital/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbital {

enum class CartanClass {
  AI, AII, AIII, CI, CII, DIII_even, DIII_odd, BDI,
  EIII, EIV, EVII, FII,
  G, EII, EVI, EIX, FI, EI, EV, EVIII
};

std::string to_string(CartanClass c);
/// Accepts the enum spellings plus "DIII(even)"-style variants.
CartanClass parse_cartan_class(const std::string& text);
bool two_parameter(CartanClass c);

/// (η₀, η₁, η₂): multiplicities of e_i±e_j, e_i and 2e_i. Exceptional rows
/// keep the listed values in order; for F4 the first is attached to long
/// roots and the second to short roots.
struct Mults {
  int eta0 = 0, eta1 = 0, eta2 = 0;
  friend bool operator==(const Mults&, const Mults&) = default;
};

/// Family parameters. `n` is the matrix size for AI/AII and the rank
/// otherwise; `p` is only meaningful for AIII, CII and BDI.
struct Params {
  std::optional<int> p;
  std::optional<int> n;
  friend bool operator==(const Params&, const Params&) = default;
};

struct SpaceDescriptor {
  LieType lie_type;
  CartanClass cartan_class = CartanClass::AI;
  Params params;
  Mults mults;
  int dim_gk = 0;
  /// Number of multiplicity entries printed for the row (1, 2 or 3).
  int listed = 3;

  int rank() const { return lie_type.rank; }
  /// m_α for a root of the given class.
  int multiplicity(MultClass c) const;
  /// "AIII(p=5,n=3)".
  std::string label() const;
};

/// Throws InvalidArgument for unknown classes or inadmissible parameters.
SpaceDescriptor lookup(CartanClass c, Params params = {});
/// Same, but addressed by the rank of the restricted root system.
SpaceDescriptor lookup_by_rank(CartanClass c, std::optional<int> rank, std::optional<int> p = {});

/// Every appendix family at each admissible rank ≤ max_rank, with
/// p ∈ {n, n+1, n+2} for the two-parameter families.
std::vector<SpaceDescriptor> all_spaces(int max_rank);

/// One printed row of the appendix charts, in symbolic form.
struct ChartRow {
  int chart;
  std::string root_type;
  std::string cartan;
  std::string dim;
  std::string mults;
  CartanClass cls;
  /// Parameter regime the row describes: "", "p>n" or "p=n".
  std::string regime;
};

const std::vector<ChartRow>& chart_rows();

/// rank + Σ_{α∈Φ⁺} m_α.
int dimension_from_roots(const SpaceDescriptor& s);

}  // namespace orbital
