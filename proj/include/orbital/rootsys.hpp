#pragma once

#include "orbital/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbital {

enum class Family { A, B, C, BC, D, G2, F4, E6, E7, E8 };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidArgument when the rank is not admissible for the family.
  void validate() const;
  bool classical() const;
  bool exceptional() const { return !classical(); }
  friend bool operator==(const LieType&, const LieType&) = default;
};

std::string family_name(Family f);
/// "A3", "BC2", "G2", ...
std::string to_string(const LieType& t);
/// Inverse of to_string; throws InvalidArgument.
LieType parse_lie_type(const std::string& text);

/// Multiplicity class of a root. S0/S1/S2 are the classical shapes
/// e_i±e_j, e_i, 2e_i. Exceptional systems use EXC_0 for long roots (or for
/// every root when simply laced) and EXC_1 for short roots.
enum class MultClass { S0, S1, S2, EXC_0, EXC_1 };
constexpr int kMultClasses = 5;
std::string to_string(MultClass c);

struct Root {
  /// Integer coordinates; the true vector is coords / RootSystem::scale().
  Eigen::VectorXi coords;
  MultClass mult_class = MultClass::S0;
};

enum class Basis { EUCLIDEAN, FUNDAMENTAL };

/// A point of 𝔞 (or its dual). EUCLIDEAN coordinates live in the ambient
/// space of the realization, FUNDAMENTAL ones are coefficients on the
/// fundamental weights dual to the simple roots.
struct ChamberPoint {
  VectorXq coords;
  Basis basis = Basis::EUCLIDEAN;
};

/// Restricted root system in its standard integer realization.
///
/// Classical types use e_i coordinates (n+1 of them for A_n). F4 and E8 are
/// stored with doubled coordinates (scale() == 2). E7 and E6 are the roots of
/// E8 orthogonal to (1,...,1)/2 and, for E6, also to e7+e8.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int ambient_dim() const { return ambient_; }
  int scale() const { return scale_; }

  /// Φ⁺ sorted lexicographically (descending) on coordinates.
  const std::vector<Root>& positive() const { return positive_; }
  /// Rows are the simple roots in ambient (unscaled, rational) coordinates.
  const MatrixXq& simple_roots() const { return simple_; }
  /// Coefficients b of positive()[i] in the simple-root basis.
  const VectorXq& simple_coords(std::size_t i) const { return simple_coords_[i]; }

  /// Rational ambient vector of a root.
  VectorXq ambient(const Root& r) const;
  /// Index into positive() of ±v, if v is a root; sign reports which.
  std::optional<std::pair<std::size_t, int>> find(const Eigen::VectorXi& v) const;

  /// Fundamental-weight point converted to ambient coordinates.
  VectorXq to_euclidean(const ChamberPoint& p) const;

 private:
  LieType type_;
  int ambient_ = 0;
  int scale_ = 1;
  std::vector<Root> positive_;
  MatrixXq simple_;
  std::vector<VectorXq> simple_coords_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Shared immutable instance per type.
const RootSystem& root_system(LieType type);

/// Φ⁺ of the given type.
const std::vector<Root>& positive_roots(LieType type);

/// Exact ⟨λ,α⟩. FUNDAMENTAL points pair through the simple-root coordinates
/// of α; they are rejected for B, C and BC.
Rational inner(const RootSystem& rs, const ChamberPoint& lambda, const Root& alpha);

/// Max-coordinate norm in the point's own basis.
Rational chamber_norm(const ChamberPoint& lambda);

/// Throws InvalidArgument unless λ lies in the closed positive chamber.
void check_chamber(const RootSystem& rs, const ChamberPoint& lambda);

/// An element of the Weyl group acting on ambient coordinates.
///
/// Classical elements are signed permutations: (w x)[perm[i]] = sign[i]·x[i].
/// G2 and F4 elements carry an explicit rational matrix.
class WeylElement {
 public:
  static WeylElement signed_permutation(std::vector<int> perm, std::vector<int> sign);
  static WeylElement from_matrix(MatrixXq m);

  VectorXq apply(const VectorXq& x) const;
  Eigen::VectorXi apply(const Eigen::VectorXi& x) const;
  MatrixXq matrix(int dim) const;

 private:
  std::vector<int> perm_, sign_;
  MatrixXq m_;
  bool is_matrix_ = false;
};

/// |W|. Defined for every family (E types included).
std::uint64_t weyl_order(LieType type);

/// Visits every Weyl element exactly once. Throws Unsupported for E types.
/// Returning false from the visitor stops the walk early.
void for_each_weyl(LieType type, const std::function<bool(const WeylElement&)>& visit);

/// Materialized list; only sensible for small groups.
std::vector<WeylElement> weyl_elements(LieType type);

}  // namespace orbital
