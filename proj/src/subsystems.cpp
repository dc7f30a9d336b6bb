#include "orbital/subsystems.hpp"

#include "orbital/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace orbital {
namespace {

// Incremental row-echelon basis over Q for membership tests.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  // Reduces v against the basis; returns true if v was independent (and adds it).
  bool add(VectorXq v) {
    reduce(v);
    for (int j = 0; j < dim_; ++j)
      if (v(j) != Rational(0)) {
        v /= v(j);
        for (auto& [p, row] : rows_)
          if (row(j) != Rational(0)) row -= row(j) * v;
        rows_.emplace_back(j, std::move(v));
        return true;
      }
    return false;
  }

  bool contains(VectorXq v) const {
    reduce(v);
    for (int j = 0; j < dim_; ++j)
      if (v(j) != Rational(0)) return false;
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(VectorXq& v) const {
    for (const auto& [p, row] : rows_)
      if (v(p) != Rational(0)) v -= v(p) * row;
  }

  int dim_;
  std::vector<std::pair<int, VectorXq>> rows_;
};

VectorXq root_vector(const Root& r) { return r.coords.cast<Rational>(); }

SpanBasis basis_of(const RootSystem& rs, const RootSet& s) {
  SpanBasis b(rs.ambient_dim());
  for (std::size_t i : s) b.add(root_vector(rs.positive()[i]));
  return b;
}

RootSet zero_set(const RootSystem& rs, const VectorXq& v) {
  ChamberPoint p{v, Basis::EUCLIDEAN};
  RootSet out;
  for (std::size_t i = 0; i < rs.positive().size(); ++i)
    if (inner(rs, p, rs.positive()[i]) == Rational(0)) out.push_back(i);
  return out;
}

// Factor of the block on indices I for a signed classical family.
void block_factor(Family f, int k, std::vector<LieType>& out) {
  if (k <= 0) return;
  switch (f) {
    case Family::BC: out.push_back({Family::BC, k}); return;
    case Family::B: out.push_back(k == 1 ? LieType{Family::A, 1} : LieType{Family::B, k}); return;
    case Family::C: out.push_back(k == 1 ? LieType{Family::A, 1} : LieType{Family::C, k}); return;
    case Family::D:
      if (k == 1) return;
      if (k == 2) {
        out.push_back({Family::A, 1});
        out.push_back({Family::A, 1});
      } else if (k == 3) {
        out.push_back({Family::A, 3});
      } else {
        out.push_back({Family::D, k});
      }
      return;
    default: return;
  }
}

void a_factor(int size, std::vector<LieType>& out) {
  if (size >= 2) out.push_back({Family::A, size - 1});
}

std::vector<Witness> candidate_witnesses(const LieType& t) {
  std::vector<Witness> out;
  const int m = t.family == Family::A ? t.rank + 1 : t.rank;
  for (int n0 = 1; n0 <= m; ++n0) {
    Witness w;
    w.kind = Witness::Kind::OMIT_INDEX;
    w.omitted = n0;
    out.push_back(w);
  }
  if (t.family != Family::A) {
    for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
      Witness w;
      w.kind = Witness::Kind::SIGN_VECTOR;
      w.signs.push_back(1);
      for (int i = 1; i < m; ++i) w.signs.push_back((mask >> (i - 1) & 1) ? -1 : 1);
      out.push_back(w);
    }
  }
  // Index splits with |J| >= 2 and |I| >= 1.
  for (int mask = 1; mask < (1 << m) - 1; ++mask) {
    std::vector<int> I, J;
    for (int i = 0; i < m; ++i) ((mask >> i & 1) ? J : I).push_back(i + 1);
    if (J.size() < 2) continue;
    const int free_signs = t.family == Family::A ? 0 : static_cast<int>(J.size()) - 1;
    for (int smask = 0; smask < (1 << free_signs); ++smask) {
      Witness w;
      w.kind = Witness::Kind::INDEX_SPLIT;
      w.I = I;
      w.J = J;
      w.signs.assign(J.size(), 1);
      for (int i = 1; i <= free_signs; ++i) w.signs[i] = (smask >> (i - 1) & 1) ? -1 : 1;
      out.push_back(w);
    }
  }
  return out;
}

std::vector<LieType> classify(const LieType& t, const Witness& w) {
  std::vector<LieType> c;
  const int m = t.family == Family::A ? t.rank + 1 : t.rank;
  if (t.family == Family::A) {
    switch (w.kind) {
      case Witness::Kind::OMIT_INDEX: a_factor(m - 1, c); break;
      case Witness::Kind::INDEX_SPLIT:
        a_factor(static_cast<int>(w.I.size()), c);
        a_factor(static_cast<int>(w.J.size()), c);
        break;
      default: break;
    }
    return c;
  }
  switch (w.kind) {
    case Witness::Kind::OMIT_INDEX: block_factor(t.family, m - 1, c); break;
    case Witness::Kind::SIGN_VECTOR: a_factor(m, c); break;
    case Witness::Kind::INDEX_SPLIT:
      block_factor(t.family, static_cast<int>(w.I.size()), c);
      a_factor(static_cast<int>(w.J.size()), c);
      break;
  }
  return c;
}

bool subset(const RootSet& a, const RootSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

AnnihilatorSet annihilator(const ChamberPoint& a, LieType type) {
  const RootSystem& rs = root_system(type);
  AnnihilatorSet out;
  out.type = type;
  out.source_point = a;
  for (std::size_t i = 0; i < rs.positive().size(); ++i)
    if (inner(rs, a, rs.positive()[i]) == Rational(0)) out.roots.push_back(i);
  if (out.roots.size() == rs.positive().size())
    throw NormalizerElement("every root annihilates the point: the element normalizes K");
  return out;
}

VectorXq Witness::normal(const RootSystem& rs) const {
  const int m = rs.ambient_dim();
  VectorXq v = VectorXq::Zero(m);
  switch (kind) {
    case Kind::OMIT_INDEX:
      if (rs.type().family == Family::A) {
        // Block split {n0} versus the rest, orthogonal to (1,...,1).
        for (int i = 0; i < m; ++i) v(i) = Rational(-1);
        v(omitted - 1) = Rational(m - 1);
      } else {
        v(omitted - 1) = Rational(1);
      }
      break;
    case Kind::SIGN_VECTOR:
      for (int i = 0; i < m; ++i) v(i) = Rational(signs[i]);
      break;
    case Kind::INDEX_SPLIT:
      if (rs.type().family == Family::A) {
        for (int i : I) v(i - 1) = Rational(static_cast<std::int64_t>(J.size()));
        for (int j : J) v(j - 1) = Rational(-static_cast<std::int64_t>(I.size()));
      } else {
        for (std::size_t k = 0; k < J.size(); ++k) v(J[k] - 1) = Rational(signs[k]);
      }
      break;
  }
  return v;
}

std::string to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::OMIT_INDEX: return "omit_index";
    case Witness::Kind::SIGN_VECTOR: return "sign_vector";
    case Witness::Kind::INDEX_SPLIT: return "index_split";
  }
  return "?";
}

std::string SubsystemDescriptor::type_name() const {
  if (components.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "×";
    s += to_string(components[i]);
  }
  return s;
}

int span_rank(LieType type, const RootSet& s) { return basis_of(root_system(type), s).rank(); }

RootSet span_closure(LieType type, const RootSet& s) {
  const RootSystem& rs = root_system(type);
  SpanBasis b = basis_of(rs, s);
  RootSet out;
  for (std::size_t i = 0; i < rs.positive().size(); ++i)
    if (b.contains(root_vector(rs.positive()[i]))) out.push_back(i);
  return out;
}

RootSet additive_closure(LieType type, const RootSet& s) {
  const RootSystem& rs = root_system(type);
  std::set<std::size_t> in(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(in.begin(), in.end());
    for (std::size_t a : cur)
      for (std::size_t b : cur)
        for (int sa : {1, -1})
          for (int sb : {1, -1}) {
            Eigen::VectorXi v = sa * rs.positive()[a].coords + sb * rs.positive()[b].coords;
            if (auto hit = rs.find(v); hit && in.insert(hit->first).second) grew = true;
          }
  }
  return RootSet(in.begin(), in.end());
}

bool is_maximal(LieType type, const RootSet& s) {
  const RootSystem& rs = root_system(type);
  const std::size_t total = rs.positive().size();
  if (s.size() >= total) return false;
  if (span_closure(type, s) != s) return false;
  for (std::size_t g = 0; g < total; ++g) {
    if (std::binary_search(s.begin(), s.end(), g)) continue;
    RootSet t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), g), g);
    if (span_closure(type, t).size() != total) return false;
  }
  return true;
}

std::vector<SubsystemDescriptor> maximal_subsystems(LieType type) {
  type.validate();
  if (!type.classical())
    throw Unsupported("maximal subsystem enumeration is only available for classical types");
  const RootSystem& rs = root_system(type);
  std::vector<SubsystemDescriptor> out;
  std::set<RootSet> seen;
  for (const Witness& w : candidate_witnesses(type)) {
    RootSet roots = zero_set(rs, w.normal(rs));
    if (seen.count(roots)) continue;
    if (!is_maximal(type, roots)) continue;
    seen.insert(roots);
    SubsystemDescriptor d;
    d.ambient = type;
    d.roots = std::move(roots);
    d.components = classify(type, w);
    d.witness = w;
    out.push_back(std::move(d));
  }
  return out;
}

SubsystemDescriptor containing_maximal(const AnnihilatorSet& ann) {
  if (ann.roots.size() >= positive_roots(ann.type).size())
    throw NormalizerElement("annihilator is not proper");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<SubsystemDescriptor>> cache;
  const std::vector<SubsystemDescriptor>* list = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(ann.type.family), ann.type.rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, maximal_subsystems(ann.type)).first;
    list = &it->second;
  }
  for (const auto& s : *list)
    if (subset(ann.roots, s.roots)) return s;
  throw VerificationFailure("no maximal subsystem contains the annihilator", to_string(ann.type));
}

}  // namespace orbital
