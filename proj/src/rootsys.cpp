#include "orbital/rootsys.hpp"

#include "orbital/error.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbital {
namespace {

using Coords = std::vector<int>;

Coords to_vec(const Eigen::VectorXi& v) { return Coords(v.data(), v.data() + v.size()); }

bool lex_positive(const Coords& c) {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

Eigen::VectorXi unit(int dim, int i, int value) {
  Eigen::VectorXi v = Eigen::VectorXi::Zero(dim);
  v(i) = value;
  return v;
}

struct Generated {
  int ambient = 0;
  int scale = 1;
  std::vector<Root> positive;
  std::vector<Eigen::VectorXi> simple;  // empty: derive from indecomposables
};

Generated classical_roots(const LieType& t) {
  Generated g;
  const int n = t.rank;
  if (t.family == Family::A) {
    g.ambient = n + 1;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        g.positive.push_back({unit(n + 1, i, 1) - unit(n + 1, j, 1), MultClass::S0});
    for (int i = 0; i < n; ++i) g.simple.push_back(unit(n + 1, i, 1) - unit(n + 1, i + 1, 1));
    return g;
  }
  g.ambient = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      g.positive.push_back({unit(n, i, 1) - unit(n, j, 1), MultClass::S0});
      g.positive.push_back({unit(n, i, 1) + unit(n, j, 1), MultClass::S0});
    }
  const bool short_roots = t.family == Family::B || t.family == Family::BC;
  const bool long_roots = t.family == Family::C || t.family == Family::BC;
  for (int i = 0; i < n; ++i) {
    if (short_roots) g.positive.push_back({unit(n, i, 1), MultClass::S1});
    if (long_roots) g.positive.push_back({unit(n, i, 2), MultClass::S2});
  }
  for (int i = 0; i + 1 < n; ++i) g.simple.push_back(unit(n, i, 1) - unit(n, i + 1, 1));
  switch (t.family) {
    case Family::B:
    case Family::BC:
      g.simple.push_back(unit(n, n - 1, 1));
      break;
    case Family::C:
      g.simple.push_back(unit(n, n - 1, 2));
      break;
    case Family::D:
      g.simple.push_back(unit(n, n - 2, 1) + unit(n, n - 1, 1));
      break;
    default:
      break;
  }
  return g;
}

// All ±e_i±e_j (i<j) times `mul`.
void add_pm_pairs(int dim, int mul, MultClass cls, std::vector<Root>& out) {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          out.push_back({unit(dim, i, si * mul) + unit(dim, j, sj * mul), cls});
}

// All (±1,...,±1); if parity >= 0 only those with #minus ≡ parity (mod 2).
void add_spinors(int dim, int parity, MultClass cls, std::vector<Root>& out) {
  for (int mask = 0; mask < (1 << dim); ++mask) {
    if (parity >= 0 && __builtin_popcount(mask) % 2 != parity) continue;
    Eigen::VectorXi v(dim);
    for (int i = 0; i < dim; ++i) v(i) = (mask >> i & 1) ? -1 : 1;
    out.push_back({v, cls});
  }
}

Generated exceptional_roots(const LieType& t) {
  Generated g;
  std::vector<Root> all;
  switch (t.family) {
    case Family::G2: {
      g.ambient = 3;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
          if (i != j) all.push_back({unit(3, i, 1) - unit(3, j, 1), MultClass::EXC_1});
        Eigen::VectorXi l = -Eigen::VectorXi::Ones(3);
        l(i) = 2;
        all.push_back({l, MultClass::EXC_0});
        all.push_back({Eigen::VectorXi(-l), MultClass::EXC_0});
      }
      break;
    }
    case Family::F4:
      g.ambient = 4;
      g.scale = 2;
      for (int i = 0; i < 4; ++i)
        for (int s : {2, -2}) all.push_back({unit(4, i, s), MultClass::EXC_1});
      add_pm_pairs(4, 2, MultClass::EXC_0, all);
      add_spinors(4, -1, MultClass::EXC_1, all);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      g.ambient = 8;
      g.scale = 2;
      std::vector<Root> e8;
      add_pm_pairs(8, 2, MultClass::EXC_0, e8);
      add_spinors(8, 0, MultClass::EXC_0, e8);
      for (auto& r : e8) {
        if (t.family != Family::E8 && r.coords.sum() != 0) continue;
        if (t.family == Family::E6 && r.coords(6) + r.coords(7) != 0) continue;
        all.push_back(r);
      }
      break;
    }
    default:
      throw std::logic_error("exceptional_roots: classical family");
  }
  std::set<Coords> seen;
  for (auto& r : all) {
    Coords c = to_vec(r.coords);
    if (lex_positive(c) && seen.insert(c).second) g.positive.push_back(r);
  }
  return g;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

void LieType::validate() const {
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("invalid rank " + std::to_string(rank) + " for type " + family_name(family) +
                          ": " + why);
  };
  switch (family) {
    case Family::A:
    case Family::BC:
      if (rank < 1) fail("rank must be >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("rank must be >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("rank must be >= 4");
      break;
    case Family::G2:
      if (rank != 2) fail("G2 has rank 2");
      break;
    case Family::F4:
      if (rank != 4) fail("F4 has rank 4");
      break;
    case Family::E6:
      if (rank != 6) fail("E6 has rank 6");
      break;
    case Family::E7:
      if (rank != 7) fail("E7 has rank 7");
      break;
    case Family::E8:
      if (rank != 8) fail("E8 has rank 8");
      break;
  }
  if (rank > 30) fail("rank must be <= 30");
}

bool LieType::classical() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::BC:
    case Family::D:
      return true;
    default:
      return false;
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string to_string(const LieType& t) {
  if (t.exceptional()) return family_name(t.family);
  return family_name(t.family) + std::to_string(t.rank);
}

LieType parse_lie_type(const std::string& text) {
  static const std::pair<const char*, LieType> fixed[] = {
      {"G2", {Family::G2, 2}}, {"F4", {Family::F4, 4}}, {"E6", {Family::E6, 6}},
      {"E7", {Family::E7, 7}}, {"E8", {Family::E8, 8}}};
  for (const auto& [name, t] : fixed)
    if (text == name) return t;
  static const std::pair<const char*, Family> prefixes[] = {
      {"BC", Family::BC}, {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D}};
  for (const auto& [pre, fam] : prefixes) {
    std::string p = pre;
    if (text.rfind(p, 0) != 0) continue;
    std::string digits = text.substr(p.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
      break;
    LieType t{fam, std::stoi(digits)};
    t.validate();
    return t;
  }
  throw InvalidArgument("unknown Lie type '" + text + "'");
}

std::string to_string(MultClass c) {
  switch (c) {
    case MultClass::S0: return "S0";
    case MultClass::S1: return "S1";
    case MultClass::S2: return "S2";
    case MultClass::EXC_0: return "EXC_0";
    case MultClass::EXC_1: return "EXC_1";
  }
  return "?";
}

RootSystem::RootSystem(LieType type) : type_(type) {
  type_.validate();
  Generated g = type_.classical() ? classical_roots(type_) : exceptional_roots(type_);
  ambient_ = g.ambient;
  scale_ = g.scale;
  positive_ = std::move(g.positive);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    return std::lexicographical_compare(b.coords.data(), b.coords.data() + b.coords.size(),
                                        a.coords.data(), a.coords.data() + a.coords.size());
  });
  for (std::size_t i = 0; i < positive_.size(); ++i) index_[to_vec(positive_[i].coords)] = i;

  if (g.simple.empty()) {
    // Indecomposable positive roots form the simple system for lex positivity.
    std::set<Coords> sums;
    for (const auto& a : positive_)
      for (const auto& b : positive_) sums.insert(to_vec(a.coords + b.coords));
    for (const auto& r : positive_)
      if (!sums.count(to_vec(r.coords))) g.simple.push_back(r.coords);
  }
  if (static_cast<int>(g.simple.size()) != type_.rank)
    throw std::logic_error("simple system of " + to_string(type_) + " has wrong size");
  simple_.resize(type_.rank, ambient_);
  for (int i = 0; i < type_.rank; ++i)
    for (int j = 0; j < ambient_; ++j) simple_(i, j) = Rational(g.simple[i](j), scale_);

  MatrixXq st = simple_.transpose();
  for (const auto& r : positive_) {
    VectorXq b = solve_exact(st, ambient(r));
    for (int i = 0; i < b.size(); ++i)
      if (b(i).den() != 1 || b(i) < Rational(0))
        throw std::logic_error("positive root with non-natural simple coordinates");
    simple_coords_.push_back(std::move(b));
  }
}

VectorXq RootSystem::ambient(const Root& r) const {
  VectorXq v(r.coords.size());
  for (Eigen::Index i = 0; i < r.coords.size(); ++i) v(i) = Rational(r.coords(i), scale_);
  return v;
}

std::optional<std::pair<std::size_t, int>> RootSystem::find(const Eigen::VectorXi& v) const {
  Coords c = to_vec(v);
  if (auto it = index_.find(c); it != index_.end()) return std::make_pair(it->second, 1);
  for (int& x : c) x = -x;
  if (auto it = index_.find(c); it != index_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

VectorXq RootSystem::to_euclidean(const ChamberPoint& p) const {
  if (p.basis == Basis::EUCLIDEAN) {
    if (p.coords.size() != ambient_) throw InvalidArgument("point has wrong number of coordinates");
    return p.coords;
  }
  if (p.coords.size() != type_.rank)
    throw InvalidArgument("fundamental-weight point needs " + std::to_string(type_.rank) + " coordinates");
  // x = Sᵀy with (S Sᵀ) y = a keeps x in the span of the roots.
  MatrixXq gram = simple_ * simple_.transpose();
  VectorXq y = solve_exact(gram, p.coords);
  return simple_.transpose() * y;
}

const RootSystem& root_system(LieType type) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RootSystem>> cache;
  type.validate();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(type.family), type.rank}];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

const std::vector<Root>& positive_roots(LieType type) { return root_system(type).positive(); }

Rational inner(const RootSystem& rs, const ChamberPoint& lambda, const Root& alpha) {
  if (lambda.basis == Basis::EUCLIDEAN) {
    if (lambda.coords.size() != rs.ambient_dim())
      throw InvalidArgument("point has " + std::to_string(lambda.coords.size()) + " coordinates, " +
                            to_string(rs.type()) + " needs " + std::to_string(rs.ambient_dim()));
    Rational s = 0;
    for (int i = 0; i < rs.ambient_dim(); ++i)
      if (alpha.coords(i) != 0) s += lambda.coords(i) * Rational(alpha.coords(i));
    return rs.scale() == 1 ? s : s / Rational(rs.scale());
  }
  const Family f = rs.type().family;
  if (f == Family::B || f == Family::C || f == Family::BC)
    throw InvalidArgument("fundamental-weight basis is not available for type " + to_string(rs.type()));
  if (lambda.coords.size() != rs.rank())
    throw InvalidArgument("fundamental-weight point needs " + std::to_string(rs.rank()) + " coordinates");
  auto hit = rs.find(alpha.coords);
  if (!hit) throw InvalidArgument("vector is not a root of " + to_string(rs.type()));
  const VectorXq& b = rs.simple_coords(hit->first);
  Rational s = 0;
  for (int i = 0; i < rs.rank(); ++i) s += lambda.coords(i) * b(i);
  return hit->second > 0 ? s : -s;
}

Rational chamber_norm(const ChamberPoint& lambda) {
  Rational m = 0;
  for (Eigen::Index i = 0; i < lambda.coords.size(); ++i) m = std::max(m, abs(lambda.coords(i)));
  return m;
}

void check_chamber(const RootSystem& rs, const ChamberPoint& lambda) {
  if (lambda.basis == Basis::FUNDAMENTAL) {
    if (lambda.coords.size() != rs.rank())
      throw InvalidArgument("fundamental-weight point needs " + std::to_string(rs.rank()) + " coordinates");
    for (Eigen::Index i = 0; i < lambda.coords.size(); ++i)
      if (lambda.coords(i) < Rational(0)) throw InvalidArgument("fundamental coordinates must be nonnegative");
    return;
  }
  if (lambda.coords.size() != rs.ambient_dim())
    throw InvalidArgument("point has wrong number of coordinates for " + to_string(rs.type()));
  const Family f = rs.type().family;
  if (f == Family::B || f == Family::C || f == Family::BC || f == Family::D)
    for (Eigen::Index i = 0; i < lambda.coords.size(); ++i)
      if (lambda.coords(i) < Rational(0)) throw InvalidArgument("euclidean coordinates must be nonnegative");
  for (int j = 0; j < rs.rank(); ++j) {
    Rational s = 0;
    for (int i = 0; i < rs.ambient_dim(); ++i) s += lambda.coords(i) * rs.simple_roots()(j, i);
    if (s < Rational(0)) throw InvalidArgument("point is outside the closed positive chamber");
  }
}

// ---------------------------------------------------------------- Weyl group

WeylElement WeylElement::signed_permutation(std::vector<int> perm, std::vector<int> sign) {
  WeylElement w;
  w.perm_ = std::move(perm);
  w.sign_ = std::move(sign);
  return w;
}

WeylElement WeylElement::from_matrix(MatrixXq m) {
  WeylElement w;
  w.m_ = std::move(m);
  w.is_matrix_ = true;
  return w;
}

VectorXq WeylElement::apply(const VectorXq& x) const {
  if (is_matrix_) return m_ * x;
  VectorXq y(x.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) y(perm_[i]) = sign_[i] < 0 ? -x(i) : x(i);
  return y;
}

Eigen::VectorXi WeylElement::apply(const Eigen::VectorXi& x) const {
  if (!is_matrix_) {
    Eigen::VectorXi y(x.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) y(perm_[i]) = sign_[i] * x(i);
    return y;
  }
  VectorXq q(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) q(i) = x(i);
  VectorXq r = m_ * q;
  Eigen::VectorXi y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (r(i).den() != 1) throw std::logic_error("Weyl image left the integer lattice");
    y(i) = static_cast<int>(r(i).num());
  }
  return y;
}

MatrixXq WeylElement::matrix(int dim) const {
  if (is_matrix_) return m_;
  MatrixXq m = MatrixXq::Zero(dim, dim);
  for (std::size_t i = 0; i < perm_.size(); ++i) m(perm_[i], i) = sign_[i];
  return m;
}

std::uint64_t weyl_order(LieType t) {
  t.validate();
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::G2: return 12;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
  }
  return 0;
}

namespace {

std::vector<Rational> matrix_key(const MatrixXq& m) {
  return std::vector<Rational>(m.data(), m.data() + m.size());
}

struct KeyLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) {
                                          if (x.num() != y.num()) return x.num() < y.num();
                                          return x.den() < y.den();
                                        });
  }
};

std::vector<MatrixXq> close_under_reflections(const RootSystem& rs) {
  const int d = rs.ambient_dim();
  std::vector<MatrixXq> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    VectorXq a = rs.simple_roots().row(i).transpose();
    Rational aa = a.dot(a);
    MatrixXq s = MatrixXq::Identity(d, d);
    s -= (a * a.transpose()) * (Rational(2) / aa);
    gens.push_back(std::move(s));
  }
  std::set<std::vector<Rational>, KeyLess> seen;
  std::vector<MatrixXq> out;
  std::deque<MatrixXq> queue;
  MatrixXq id = MatrixXq::Identity(d, d);
  seen.insert(matrix_key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    MatrixXq m = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      MatrixXq next = s * m;
      if (seen.insert(matrix_key(next)).second) queue.push_back(next);
    }
    out.push_back(std::move(m));
  }
  return out;
}

const std::vector<MatrixXq>& exceptional_group(Family f) {
  static std::once_flag g2_once, f4_once;
  static std::vector<MatrixXq> g2, f4;
  if (f == Family::G2) {
    std::call_once(g2_once, [] { g2 = close_under_reflections(root_system({Family::G2, 2})); });
    return g2;
  }
  std::call_once(f4_once, [] { f4 = close_under_reflections(root_system({Family::F4, 4})); });
  return f4;
}

}  // namespace

void for_each_weyl(LieType t, const std::function<bool(const WeylElement&)>& visit) {
  t.validate();
  switch (t.family) {
    case Family::E6:
    case Family::E7:
    case Family::E8:
      throw Unsupported("Weyl group enumeration is not available for " + to_string(t));
    case Family::G2:
    case Family::F4:
      for (const auto& m : exceptional_group(t.family))
        if (!visit(WeylElement::from_matrix(m))) return;
      return;
    default:
      break;
  }
  const int m = t.family == Family::A ? t.rank + 1 : t.rank;
  const bool signs = t.family != Family::A;
  const bool even_only = t.family == Family::D;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> sign(m, 1);
  do {
    const int masks = signs ? (1 << m) : 1;
    for (int mask = 0; mask < masks; ++mask) {
      if (even_only && __builtin_popcount(mask) % 2 != 0) continue;
      for (int i = 0; i < m; ++i) sign[i] = (mask >> i & 1) ? -1 : 1;
      if (!visit(WeylElement::signed_permutation(perm, sign))) return;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<WeylElement> weyl_elements(LieType t) {
  std::vector<WeylElement> out;
  for_each_weyl(t, [&](const WeylElement& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace orbital
