#include "orbital/decay.hpp"

#include "orbital/error.hpp"
#include "orbital/subsystems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace orbital {
namespace {

bool bc_family(Family f) { return f == Family::B || f == Family::C || f == Family::BC; }

bool f4_two_mult(const SpaceDescriptor& s) { return s.lie_type.family == Family::F4 && s.listed == 2; }

bool ai_a1(const SpaceDescriptor& s) {
  return s.cartan_class == CartanClass::AI && s.lie_type.family == Family::A && s.rank() == 1;
}

std::string point_str(const ChamberPoint& p) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) os << (i ? ", " : "") << p.coords(i);
  os << ") " << (p.basis == Basis::EUCLIDEAN ? "euclidean" : "fundamental");
  return os.str();
}

// A chamber point scaled to integers: coords / den.
struct IntPoint {
  std::vector<std::int64_t> c;
  std::int64_t den = 1;
};

IntPoint to_int(const VectorXq& v) {
  IntPoint p;
  for (Eigen::Index i = 0; i < v.size(); ++i) p.den = std::lcm(p.den, v(i).den());
  for (Eigen::Index i = 0; i < v.size(); ++i) p.c.push_back(v(i).num() * (p.den / v(i).den()));
  return p;
}

// Integer pairing data for one type and basis.
struct Pairing {
  const RootSystem* rs = nullptr;
  Basis basis = Basis::EUCLIDEAN;
  std::vector<std::vector<std::int64_t>> vecs;  // per positive root
  std::vector<MultClass> cls;

  Pairing(const RootSystem& r, Basis b) : rs(&r), basis(b) {
    for (std::size_t i = 0; i < r.positive().size(); ++i) {
      std::vector<std::int64_t> v;
      if (b == Basis::EUCLIDEAN) {
        const auto& c = r.positive()[i].coords;
        for (Eigen::Index j = 0; j < c.size(); ++j) v.push_back(c(j));
      } else {
        const VectorXq& q = r.simple_coords(i);
        for (Eigen::Index j = 0; j < q.size(); ++j) {
          if (q(j).den() != 1) throw std::logic_error("non-integral simple coordinates");
          v.push_back(q(j).num());
        }
      }
      vecs.push_back(std::move(v));
      cls.push_back(r.positive()[i].mult_class);
    }
  }

  // ⟨λ,α⟩ ≥ cG‖λ‖ with ‖λ‖ the max-coordinate norm in the point's basis.
  std::array<int, kMultClasses> profile(const IntPoint& p, const Rational& cG) const {
    std::int64_t mx = 0;
    for (auto x : p.c) mx = std::max(mx, x < 0 ? -x : x);
    const __int128 rhs = static_cast<__int128>(cG.num()) * mx * (basis == Basis::EUCLIDEAN ? rs->scale() : 1);
    std::array<int, kMultClasses> out{};
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      __int128 dot = 0;
      for (std::size_t j = 0; j < p.c.size(); ++j) dot += static_cast<__int128>(p.c[j]) * vecs[i][j];
      if (dot * cG.den() >= rhs) ++out[static_cast<int>(cls[i])];
    }
    return out;
  }
};

int weigh(const std::array<int, kMultClasses>& counts, const SpaceDescriptor& s) {
  int w = 0;
  for (int c = 0; c < kMultClasses; ++c) w += counts[c] * s.multiplicity(static_cast<MultClass>(c));
  return w;
}

void check_nonzero(const ChamberPoint& p) {
  for (Eigen::Index i = 0; i < p.coords.size(); ++i)
    if (p.coords(i) != Rational(0)) return;
  throw InvalidArgument("λ must be nonzero");
}

// Probe points of the oracle, in the basis the counting argument uses.
std::vector<ChamberPoint> make_probes(const RootSystem& rs, Basis basis, std::uint64_t seed, std::size_t random) {
  const int n = rs.rank();
  std::vector<ChamberPoint> out;
  auto from_fundamental = [&](const VectorXq& a) {
    ChamberPoint f{a, Basis::FUNDAMENTAL};
    if (basis == Basis::FUNDAMENTAL) return f;
    return ChamberPoint{rs.to_euclidean(f), Basis::EUCLIDEAN};
  };
  for (int i = 0; i < n; ++i) {
    VectorXq a = VectorXq::Zero(n);
    a(i) = 1;
    out.push_back(from_fundamental(a));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // single weights already listed
    VectorXq a = VectorXq::Zero(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) a(i) = 1;
    out.push_back(from_fundamental(a));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 8);
  std::uniform_int_distribution<int> zero_dist(0, 2);
  while (out.size() < random + static_cast<std::size_t>(n) + ((std::size_t{1} << n) - 1 - n)) {
    const int d = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, 2 * d);
    std::vector<int> c(n);
    for (int& x : c) x = zero_dist(rng) == 0 ? 0 : num_dist(rng);
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) continue;
    if (basis == Basis::FUNDAMENTAL) {
      VectorXq a(n);
      for (int i = 0; i < n; ++i) a(i) = Rational(c[i], d);
      out.push_back({a, Basis::FUNDAMENTAL});
    } else {
      // Classical B/C/BC chamber: nonincreasing nonnegative coordinates.
      std::sort(c.begin(), c.end(), std::greater<>());
      VectorXq a(rs.ambient_dim());
      for (int i = 0; i < n; ++i) a(i) = Rational(c[i], d);
      out.push_back({a, Basis::EUCLIDEAN});
    }
  }
  return out;
}

struct ProbeTable {
  std::vector<ChamberPoint> points;
  std::vector<std::array<int, kMultClasses>> profiles;
};

const ProbeTable& probe_table(LieType type, Rational cG, std::uint64_t seed, std::size_t random) {
  using Key = std::tuple<int, int, std::int64_t, std::int64_t, std::uint64_t, std::size_t>;
  static std::mutex mu;
  static std::map<Key, ProbeTable> cache;
  const Key key{static_cast<int>(type.family), type.rank, cG.num(), cG.den(), seed, random};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const RootSystem& rs = root_system(type);
  const Basis basis = default_basis(type);
  ProbeTable t;
  t.points = make_probes(rs, basis, seed, random);
  Pairing pairing(rs, basis);
  t.profiles.reserve(t.points.size());
  for (const auto& p : t.points) t.profiles.push_back(pairing.profile(to_int(p.coords), cG));
  return cache.emplace(key, std::move(t)).first->second;
}

// Distinct annihilator patterns {Φ⁺(w a) : w ∈ W} as root-index masks.
std::vector<std::vector<char>> annihilator_masks(const RootSystem& rs, const ChamberPoint& a) {
  const AnnihilatorSet ann = annihilator(a, rs.type());
  std::vector<Eigen::VectorXi> base;
  for (std::size_t i : ann.roots) base.push_back(rs.positive()[i].coords);
  std::set<std::vector<char>> seen;
  if (base.empty()) {
    seen.insert(std::vector<char>(rs.positive().size(), 0));
  } else {
    for_each_weyl(rs.type(), [&](const WeylElement& w) {
      std::vector<char> mask(rs.positive().size(), 0);
      for (const auto& v : base) {
        auto hit = rs.find(w.apply(v));
        if (!hit) throw std::logic_error("Weyl image of a root is not a root");
        mask[hit->first] = 1;
      }
      seen.insert(std::move(mask));
      return true;
    });
  }
  return {seen.begin(), seen.end()};
}

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

int CountProfile::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

int CountProfile::weighted(const SpaceDescriptor& s) const { return weigh(counts, s); }

Rational default_cg(LieType type) { return bc_family(type.family) ? r(1, 2) : r(1); }

Basis default_basis(LieType type) { return bc_family(type.family) ? Basis::EUCLIDEAN : Basis::FUNDAMENTAL; }

CountProfile u_counts(const ChamberPoint& lambda, LieType type, Rational cG) {
  if (cG <= Rational(0)) throw InvalidArgument("c_G must be positive");
  const RootSystem& rs = root_system(type);
  check_nonzero(lambda);
  if (lambda.basis == Basis::FUNDAMENTAL && bc_family(type.family))
    throw InvalidArgument("fundamental-weight basis is not available for type " + to_string(type));
  check_chamber(rs, lambda);
  CountProfile out;
  out.cG = cG;
  out.lambda = lambda;
  out.counts = Pairing(rs, lambda.basis).profile(to_int(lambda.coords), cG);
  return out;
}

int rho_formula(const SpaceDescriptor& s) {
  const int n = s.rank();
  const Mults& m = s.mults;
  switch (s.lie_type.family) {
    case Family::A: return m.eta0 * n;
    case Family::D: return 2 * m.eta0 * (n - 1);
    case Family::B:
    case Family::C:
    case Family::BC:
      if (n == 1) return m.eta1 + m.eta2;
      return m.eta0 * (2 * n - 3) + m.eta1 + m.eta2;
    default:
      throw InvalidArgument("no closed-form ϱ for exceptional type " + to_string(s.lie_type) +
                            "; use exceptional_mincount");
  }
}

int rho_sharp(const SpaceDescriptor& s) {
  const int n = s.rank();
  if (!bc_family(s.lie_type.family) || n < 2) return rho(s);
  const int e = s.mults.eta1 + s.mults.eta2;
  return std::min(2 * s.mults.eta0 * (n - 1) + e, s.mults.eta0 * (2 * n - 3) + 2 * e);
}

std::vector<int> exceptional_mincount(const SpaceDescriptor& s) {
  switch (s.lie_type.family) {
    case Family::G2: return {5};
    case Family::E6: return {16};
    case Family::E7: return {27};
    case Family::E8: return {57};
    case Family::F4: return s.listed == 2 ? std::vector<int>{9, 6} : std::vector<int>{15};
    default: throw InvalidArgument("exceptional_mincount needs an exceptional type");
  }
}

std::vector<std::array<int, 2>> fundamental_weight_counts(LieType type) {
  const RootSystem& rs = root_system(type);
  Pairing pairing(rs, Basis::FUNDAMENTAL);
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < rs.rank(); ++i) {
    IntPoint p;
    p.c.assign(rs.rank(), 0);
    p.c[i] = 1;
    auto prof = pairing.profile(p, r(1));
    out.push_back({prof[static_cast<int>(MultClass::EXC_0)] + prof[static_cast<int>(MultClass::S0)],
                   prof[static_cast<int>(MultClass::EXC_1)]});
  }
  return out;
}

int rho(const SpaceDescriptor& s) {
  if (s.lie_type.classical()) return rho_formula(s);
  const auto c = exceptional_mincount(s);
  if (c.size() == 1) return s.mults.eta0 * c[0];
  // The listed pair is (long, short); the count pair may attach either way.
  const int a = s.mults.eta0, b = s.mults.eta1;
  return std::min(c[0] * a + c[1] * b, c[1] * a + c[0] * b);
}

RhoOracleResult rho_oracle_scan(const SpaceDescriptor& s, Rational cG, std::uint64_t seed,
                                std::size_t random_probes) {
  if (s.rank() > 8) throw InvalidArgument("rho_oracle needs rank <= 8");
  const ProbeTable& t = probe_table(s.lie_type, cG, seed, random_probes);
  RhoOracleResult res;
  res.formula = rho(s);
  res.sharp = rho_sharp(s);
  res.probes = t.points.size();
  res.minimum = -1;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    const int w = weigh(t.profiles[i], s);
    if (res.minimum < 0 || w < res.minimum) {
      res.minimum = w;
      res.argmin = t.points[i];
    }
    if (w < res.formula && res.bound_holds) {
      res.bound_holds = false;
      res.violation = t.points[i];
    }
  }
  res.attained = res.minimum == res.formula;
  return res;
}

int rho_oracle(const SpaceDescriptor& s, Rational cG, std::uint64_t seed, std::size_t random_probes) {
  const RhoOracleResult res = rho_oracle_scan(s, cG, seed, random_probes);
  if (!res.bound_holds)
    throw VerificationFailure(s.label() + ": probe below ϱ = " + std::to_string(res.formula),
                              point_str(*res.violation));
  if (!res.attained)
    throw VerificationFailure(s.label() + ": probe minimum " + std::to_string(res.minimum) +
                                  " does not attain ϱ = " + std::to_string(res.formula),
                              point_str(res.argmin));
  return res.minimum;
}

double log_p_bound(const ChamberPoint& lambda, int k, const ChamberPoint& a, const SpaceDescriptor& s) {
  const LieType type = s.lie_type;
  if (type.family == Family::E6 || type.family == Family::E7 || type.family == Family::E8)
    throw Unsupported("P-bound needs Weyl enumeration, unavailable for " + to_string(type));
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  const RootSystem& rs = root_system(type);
  check_chamber(rs, lambda);

  static std::mutex mu;
  static std::map<std::pair<std::string, std::string>, std::vector<std::vector<char>>> cache;
  const ChamberPoint a_euc{rs.to_euclidean(a), Basis::EUCLIDEAN};
  const std::vector<std::vector<char>>* masks = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(to_string(type), point_str(a_euc));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, annihilator_masks(rs, a_euc)).first;
    masks = &it->second;
  }

  const auto& roots = rs.positive();
  std::vector<double> term(roots.size());
  double all = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    term[i] = s.multiplicity(roots[i].mult_class) * std::log1p(inner(rs, lambda, roots[i]).to_double());
    all += term[i];
  }
  // Roots outside Φ⁺(w a) carry exponent −m_α k.
  double best = -INFINITY;
  for (const auto& mask : *masks) {
    double outside = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (!mask[i]) outside += term[i];
    best = std::max(best, all - k * outside);
  }
  return best;
}

double p_bound(const ChamberPoint& lambda, int k, const ChamberPoint& a, const SpaceDescriptor& s) {
  return std::exp(log_p_bound(lambda, k, a, s));
}

std::optional<int> p_k(const SpaceDescriptor& s, int k) {
  const int n = s.rank();
  if (s.lie_type.family == Family::A && k >= n) return k - n;
  if (s.lie_type.family == Family::D && k >= n - 1) return 2 * (k - n + 1);
  return std::nullopt;
}

std::optional<Rational> kappa_n(const SpaceDescriptor& s) {
  if (!bc_family(s.lie_type.family) || s.rank() < 3) return std::nullopt;
  return r(2 * (s.rank() - 1)) + r(s.mults.eta1 + s.mults.eta2, s.mults.eta0);
}

namespace {
std::pair<int, int> small_large(const SpaceDescriptor& s) {
  const int a = s.mults.eta0, b = s.mults.eta1 + s.mults.eta2;
  return {std::min(a, b), std::max(a, b)};
}
}  // namespace

std::optional<Rational> kappa_2(const SpaceDescriptor& s) {
  if (!bc_family(s.lie_type.family) || s.rank() != 2) return std::nullopt;
  auto [m, M] = small_large(s);
  return r(1) + r(M, 2 * m);
}

std::optional<Rational> group_exponent_s(const SpaceDescriptor& s) {
  const int n = s.rank();
  switch (s.lie_type.family) {
    case Family::A: return r(1, n);  // A_n is A_{(n+1)−1}
    case Family::D: return r(1, n - 1);
    case Family::E6: case Family::E7: case Family::E8: return r(1, n - 1);
    case Family::F4: return r(1, 5);
    case Family::G2: return r(2, 5);
    default: return std::nullopt;
  }
}

int Gate::min_k() const {
  const Rational f = floor(value);
  const std::int64_t base = f.num();
  if (strict) return static_cast<int>(base + 1);
  return static_cast<int>(value == f ? base : base + 1);
}

Gate k_gate(const SpaceDescriptor& s) {
  const int n = s.rank();
  const int e0 = s.mults.eta0, e12 = s.mults.eta1 + s.mults.eta2;
  Gate g;
  switch (s.lie_type.family) {
    case Family::A:
      g.value = r(n) + r(n, e0);
      g.rule = "type A_n gate k > n + n/η₀";
      return g;
    case Family::D:
      g.value = r(n - 1) + r(n, 2 * e0);
      g.rule = "type D_n gate k > n − 1 + n/(2η₀)";
      return g;
    case Family::B:
    case Family::C:
    case Family::BC:
      if (n == 1) {
        g.value = r(1);
        g.rule = "rank one: every point of A₀ is regular, gate k > 1";
      } else if (n == 2) {
        g.value = std::max(r(4), r(2) + r(e12, 2 * e0));
        g.rule = "rank-two B/C/BC gate k > max(4, 2 + (η₁+η₂)/(2η₀))";
      } else {
        g.value = r(2 * (n - 1)) + r(n + e12, e0);
        g.rule = "B/C/BC gate k > 2(n−1) + (n+η₁+η₂)/η₀";
      }
      return g;
    default: break;
  }
  g.strict = false;
  switch (s.cartan_class) {
    case CartanClass::EII: g.value = r(7); break;
    case CartanClass::EVI: g.value = r(11); break;
    case CartanClass::EIX: g.value = r(19); break;
    default:
      switch (s.lie_type.family) {
        case Family::G2: g.value = r(4); break;
        case Family::F4: case Family::E6: g.value = r(7); break;
        default: g.value = r(8); break;
      }
  }
  g.rule = f4_two_mult(s) ? "exceptional chart, two-multiplicity F4 row (k ≥ k_G)"
                          : "exceptional chart, single multiplicity (k ≥ k_G)";
  return g;
}

int regular_threshold(const SpaceDescriptor& s) { return ai_a1(s) ? 3 : 2; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IN_L2: return "IN_L2";
    case Verdict::NOT_IN_L2: return "NOT_IN_L2";
    case Verdict::UNDECIDED: return "UNDECIDED";
  }
  return "?";
}

L2Result l2_gate(const SpaceDescriptor& s, int k, bool regular) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const int n = s.rank();
  if (k == 1) return {Verdict::NOT_IN_L2, "k = 1: ν_a is singular to Haar measure"};
  if (regular || n == 1) {
    if (k < regular_threshold(s))
      return {Verdict::NOT_IN_L2, "regular AI A₁ at k = 2: the Plancherel integral diverges logarithmically"};
    const int rh = rho(s);
    if ((1 - k) * rh + n - 1 < -1)
      return {Verdict::IN_L2, "regular-element decay: (1−k)ϱ + n − 1 < −1 with ϱ = " + std::to_string(rh)};
    const int sharp = rho_sharp(s);
    if (sharp != rh && (1 - k) * sharp + n - 1 < -1)
      return {Verdict::IN_L2, "regular-element decay with the unweakened B/C/BC count ϱ' = " +
                                  std::to_string(sharp) + ": (1−k)ϱ' + n − 1 < −1"};
    if (s.cartan_class == CartanClass::AI && k == 2 && n >= 2)
      return {Verdict::IN_L2, "AI A_n region refinement (rank ≥ 2) at k = 2"};
    return {Verdict::UNDECIDED, "no regular-element rule certifies this k"};
  }
  const Gate g = k_gate(s);
  if (g.admits(k)) return {Verdict::IN_L2, g.rule};
  return {Verdict::UNDECIDED, "below the gate (" + g.rule + "); only sufficiency is known"};
}

std::optional<QExponent> q_exponent(const SpaceDescriptor& s, int j, bool regular) {
  if (j < 1) throw InvalidArgument("q(j) needs j >= 1");
  const int n = s.rank();
  if (regular || n == 1) {
    const int rh = rho(s);
    return QExponent{r((1 - j) * rh), "regular-element decay q(j) = (1−j)ϱ, ϱ = " + std::to_string(rh)};
  }
  const Family f = s.lie_type.family;
  if (f == Family::A || f == Family::D) {
    auto p = p_k(s, j);
    if (!p) return std::nullopt;
    return QExponent{r(-s.mults.eta0 * *p), "A/D product bound q(j) = −η₀p_j"};
  }
  if (bc_family(f)) {
    if (n >= 3) {
      if (Rational(j) < *kappa_n(s)) return std::nullopt;
      return QExponent{r(s.mults.eta0 * (2 * (n - 1) - j) + s.mults.eta1 + s.mults.eta2),
                       "B/C/BC induction q(j) = η₀(2(n−1)−j) + η₁ + η₂ for j ≥ κ_n"};
    }
    if (Rational(j) < *kappa_2(s)) return std::nullopt;
    auto [m, M] = small_large(s);
    return QExponent{r(2 * m * (1 - j) + M), "rank-two B/C/BC base case q(j) = 2m(1−j) + M for j ≥ κ₂"};
  }
  if (f4_two_mult(s)) return std::nullopt;
  const Rational sx = *group_exponent_s(s);
  if (Rational(j) * sx < Rational(1)) return std::nullopt;
  const int q = exceptional_mincount(s)[0];
  return QExponent{(Rational(1) - Rational(j) * sx) * Rational(s.mults.eta0 * q),
                   "exceptional product bound q(j) = (1 − js)·η·min|U|"};
}

DiffResult diff_order(const SpaceDescriptor& s, int k, bool regular) {
  if (k <= 0 || k % 2 != 0) throw InvalidArgument("diff_order needs a positive even k");
  const auto q = q_exponent(s, k / 2, regular);
  if (!q) return {0, "no decay exponent at k/2 = " + std::to_string(k / 2) + "; order 0"};
  // r < −n − q(k/2)
  const Rational bound = Rational(-s.rank()) - q->value;
  const Rational top = ceil(bound) - Rational(1);
  const int order = top < Rational(0) ? 0 : static_cast<int>(top.num());
  return {order, q->rule + "; differentiability needs n − 1 + q(k/2) + r < −1"};
}

std::optional<bool> diff_fast_path(const SpaceDescriptor& s, int k, bool regular) {
  const int n = s.rank();
  if (regular || n == 1) {
    if (ai_a1(s)) return std::nullopt;
    return k > 4;
  }
  if (s.lie_type.family == Family::A)
    return Rational(k) > Rational(2 * n) + Rational(2 * (n + 1), s.mults.eta0);
  return std::nullopt;
}

DecayReport decay_report(const SpaceDescriptor& s, int k, bool regular) {
  DecayReport rep;
  rep.space = s;
  rep.k = k;
  rep.regular = regular;
  auto note = [&](const std::string& rule) { rep.rules_applied.push_back(rule); };

  rep.rho = rho(s);
  note(s.lie_type.classical() ? "regular-element counting lemma: ϱ closed form"
                              : "exceptional minimal counts: ϱ = weighted min|U|");
  if (bc_family(s.lie_type.family) && s.rank() >= 2) {
    rep.rho_sharp = rho_sharp(s);
    note("unweakened B/C/BC count min(2η₀(n−1)+η₁+η₂, η₀(2n−3)+2(η₁+η₂))");
  }
  if (k >= 1) {
    rep.p_k = p_k(s, k);
    if (rep.p_k) note("A/D product lemma: p_k");
  }
  rep.kappa = kappa_n(s);
  if (rep.kappa) note("B/C/BC induction threshold κ_n");
  rep.kappa2 = kappa_2(s);
  if (rep.kappa2) {
    auto [m, M] = small_large(s);
    rep.m = Rational(m);
    rep.M = Rational(M);
    note("rank-two base case κ₂ = 1 + M/(2m)");
  }
  rep.s = group_exponent_s(s);
  if (rep.s) note("maximal-subsystem product exponent s");
  rep.k_gate = k_gate(s);
  note(rep.k_gate.rule);
  rep.regular_threshold = regular_threshold(s);
  note("regular-element theorem: threshold " + std::to_string(rep.regular_threshold));
  if (k >= 1) {
    rep.l2 = l2_gate(s, k, regular);
    note(rep.l2.rule);
    if (auto q = q_exponent(s, k, regular)) {
      rep.q = q->value;
      note(q->rule);
    }
  }
  if (k > 0 && k % 2 == 0) {
    rep.diff = diff_order(s, k, regular);
    note(rep.diff->rule);
  }
  return rep;
}

}  // namespace orbital
