#include "doctest.h"
#include "orbital/error.hpp"
#include "orbital/rootsys.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

using namespace orbital;

namespace {

std::vector<int> key(const Eigen::VectorXi& v) { return {v.data(), v.data() + v.size()}; }

// Full root set Φ = Φ⁺ ∪ −Φ⁺ with classes.
std::map<std::vector<int>, MultClass> full_system(const RootSystem& rs) {
  std::map<std::vector<int>, MultClass> out;
  for (const auto& r : rs.positive()) {
    out[key(r.coords)] = r.mult_class;
    out[key(-r.coords)] = r.mult_class;
  }
  return out;
}

ChamberPoint euclid(std::initializer_list<Rational> xs) {
  ChamberPoint p;
  p.coords.resize(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) p.coords(i++) = x;
  return p;
}

std::vector<LieType> all_types(int max_rank) {
  std::vector<LieType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back({Family::A, n});
    out.push_back({Family::BC, n});
    if (n >= 2) {
      out.push_back({Family::B, n});
      out.push_back({Family::C, n});
    }
    if (n >= 4) out.push_back({Family::D, n});
  }
  return out;
}

}  // namespace

TEST_CASE("positive root counts, ranks up to 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(positive_roots({Family::A, n}).size() == std::size_t(n * (n + 1) / 2));
    CHECK(positive_roots({Family::BC, n}).size() == std::size_t(n * n + n));
    if (n >= 2) {
      CHECK(positive_roots({Family::B, n}).size() == std::size_t(n * n));
      CHECK(positive_roots({Family::C, n}).size() == std::size_t(n * n));
    }
    if (n >= 4) CHECK(positive_roots({Family::D, n}).size() == std::size_t(n * (n - 1)));
  }
  CHECK(positive_roots({Family::G2, 2}).size() == 6);
  CHECK(positive_roots({Family::F4, 4}).size() == 24);
  CHECK(positive_roots({Family::E6, 6}).size() == 36);
  CHECK(positive_roots({Family::E7, 7}).size() == 63);
  CHECK(positive_roots({Family::E8, 8}).size() == 120);
}

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(root_system({Family::B, 1}), InvalidArgument);
  CHECK_THROWS_AS(root_system({Family::C, 1}), InvalidArgument);
  CHECK_THROWS_AS(root_system({Family::D, 3}), InvalidArgument);
  CHECK_THROWS_AS(root_system({Family::A, 0}), InvalidArgument);
  CHECK_THROWS_AS(root_system({Family::G2, 3}), InvalidArgument);
  CHECK_NOTHROW(root_system({Family::BC, 1}));
}

TEST_CASE("BC2 and A2 root lists") {
  std::set<std::vector<int>> bc2;
  for (const auto& r : positive_roots({Family::BC, 2})) bc2.insert(key(r.coords));
  CHECK(bc2 == std::set<std::vector<int>>{{1, -1}, {1, 1}, {1, 0}, {0, 1}, {2, 0}, {0, 2}});
  std::set<std::vector<int>> a2;
  for (const auto& r : positive_roots({Family::A, 2})) {
    a2.insert(key(r.coords));
    CHECK(r.mult_class == MultClass::S0);
  }
  CHECK(a2 == std::set<std::vector<int>>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  for (const auto& r : positive_roots({Family::D, 4})) CHECK(r.mult_class == MultClass::S0);
}

TEST_CASE("mult class matches coordinate shape") {
  for (const auto& t : all_types(6)) {
    for (const auto& r : positive_roots(t)) {
      int nonzero = 0, maxabs = 0;
      for (int i = 0; i < r.coords.size(); ++i)
        if (r.coords(i) != 0) {
          ++nonzero;
          maxabs = std::max(maxabs, std::abs(r.coords(i)));
        }
      switch (r.mult_class) {
        case MultClass::S0: CHECK((nonzero == 2 && maxabs == 1)); break;
        case MultClass::S1: CHECK((nonzero == 1 && maxabs == 1)); break;
        case MultClass::S2: CHECK((nonzero == 1 && maxabs == 2)); break;
        default: FAIL("exceptional class in classical system");
      }
    }
  }
}

TEST_CASE("exceptional systems are closed under their own reflections") {
  for (LieType t : {LieType{Family::G2, 2}, LieType{Family::F4, 4}, LieType{Family::E6, 6},
                    LieType{Family::E7, 7}, LieType{Family::E8, 8}}) {
    const RootSystem& rs = root_system(t);
    auto phi = full_system(rs);
    std::set<int> norms;
    for (const auto& a : rs.positive()) {
      int aa = a.coords.squaredNorm();
      norms.insert(aa);
      for (const auto& [bk, bcls] : phi) {
        Eigen::VectorXi b = Eigen::Map<const Eigen::VectorXi>(bk.data(), static_cast<Eigen::Index>(bk.size()));
        int ab = a.coords.dot(b);
        REQUIRE((2 * ab) % aa == 0);
        Eigen::VectorXi img = b - (2 * ab / aa) * a.coords;
        auto it = phi.find(key(img));
        REQUIRE(it != phi.end());
        CHECK(it->second == bcls);
      }
    }
    // long roots are EXC_0, short EXC_1
    int long_norm = *norms.rbegin();
    for (const auto& a : rs.positive())
      CHECK((a.mult_class == MultClass::EXC_0) == (a.coords.squaredNorm() == long_norm));
    CHECK(rs.simple_roots().rows() == t.rank);
  }
}

TEST_CASE("inner product examples") {
  const RootSystem& bc2 = root_system({Family::BC, 2});
  ChamberPoint l = euclid({3, 1});
  auto root = [&](std::vector<int> c) {
    Root r;
    r.coords = Eigen::Map<Eigen::VectorXi>(c.data(), 2);
    return r;
  };
  CHECK(inner(bc2, l, root({1, 1})) == Rational(4));
  CHECK(inner(bc2, l, root({0, 2})) == Rational(2));

  const RootSystem& a2 = root_system({Family::A, 2});
  ChamberPoint w1{VectorXq::Zero(2), Basis::FUNDAMENTAL};
  w1.coords(0) = 1;
  Root e12;
  e12.coords = Eigen::Vector3i(1, -1, 0);
  CHECK(inner(a2, w1, e12) == Rational(1));

  ChamberPoint fund_bc{VectorXq::Ones(2), Basis::FUNDAMENTAL};
  CHECK_THROWS_AS(inner(bc2, fund_bc, root({1, 1})), InvalidArgument);
}

TEST_CASE("fundamental and euclidean pairings agree") {
  for (LieType t : {LieType{Family::A, 4}, LieType{Family::D, 5}, LieType{Family::G2, 2}, LieType{Family::F4, 4},
                    LieType{Family::E6, 6}, LieType{Family::E7, 7}, LieType{Family::E8, 8}}) {
    const RootSystem& rs = root_system(t);
    for (int m = 0; m < t.rank; ++m) {
      ChamberPoint w{VectorXq::Zero(t.rank), Basis::FUNDAMENTAL};
      w.coords(m) = 1;
      ChamberPoint e{rs.to_euclidean(w), Basis::EUCLIDEAN};
      for (std::size_t i = 0; i < rs.positive().size(); ++i) {
        const Root& r = rs.positive()[i];
        CHECK(inner(rs, w, r) == inner(rs, e, r));
        CHECK(inner(rs, w, r) == rs.simple_coords(i)(m));
      }
    }
  }
}

TEST_CASE("chamber norm") {
  CHECK(chamber_norm({VectorXq(Eigen::Vector3i(2, 5, 1).cast<Rational>()), Basis::FUNDAMENTAL}) == Rational(5));
  CHECK(chamber_norm(euclid({3, 1})) == Rational(3));
  CHECK(chamber_norm(euclid({0, 0})) == Rational(0));
}

TEST_CASE("chamber membership") {
  const RootSystem& bc2 = root_system({Family::BC, 2});
  CHECK_NOTHROW(check_chamber(bc2, euclid({3, 1})));
  CHECK_THROWS_AS(check_chamber(bc2, euclid({1, 3})), InvalidArgument);
  CHECK_THROWS_AS(check_chamber(bc2, euclid({1, -1})), InvalidArgument);
  CHECK_THROWS_AS(check_chamber(bc2, euclid({1, 1, 1})), InvalidArgument);
}

TEST_CASE("inner is bilinear on random rational points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (const auto& t : all_types(5)) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 20; ++trial) {
      ChamberPoint a{VectorXq(rs.ambient_dim()), Basis::EUCLIDEAN}, b = a;
      for (int i = 0; i < rs.ambient_dim(); ++i) {
        a.coords(i) = Rational(num(rng), den(rng));
        b.coords(i) = Rational(num(rng), den(rng));
      }
      ChamberPoint s{a.coords + b.coords, Basis::EUCLIDEAN};
      for (const auto& r : rs.positive()) CHECK(inner(rs, s, r) == inner(rs, a, r) + inner(rs, b, r));
    }
  }
}

TEST_CASE("A_n fundamental weight support") {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem& rs = root_system({Family::A, n});
    for (int m = 1; m <= n; ++m) {
      std::set<std::vector<int>> got, want;
      for (std::size_t i = 0; i < rs.positive().size(); ++i)
        if (rs.simple_coords(i)(m - 1) >= Rational(1)) got.insert(key(rs.positive()[i].coords));
      for (int i = 0; i < m; ++i)
        for (int j = m; j <= n; ++j) {
          Eigen::VectorXi v = Eigen::VectorXi::Zero(n + 1);
          v(i) = 1;
          v(j) = -1;
          want.insert(key(v));
        }
      CHECK(got == want);
      CHECK(got.size() == std::size_t(m * (n + 1 - m)));
      CHECK(int(got.size()) >= n);
    }
  }
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_elements({Family::A, 2}).size() == 6);
  CHECK(weyl_elements({Family::BC, 2}).size() == 8);
  CHECK(weyl_elements({Family::D, 4}).size() == 192);
  CHECK(weyl_elements({Family::G2, 2}).size() == 12);
  CHECK(weyl_elements({Family::F4, 4}).size() == 1152);
  CHECK(weyl_order({Family::E8, 8}) == 696729600ULL);
  CHECK_THROWS_AS(weyl_elements({Family::E6, 6}), Unsupported);
}

TEST_CASE("Weyl elements permute roots and preserve classes") {
  std::vector<LieType> types = all_types(4);
  types.push_back({Family::G2, 2});
  types.push_back({Family::F4, 4});
  for (const auto& t : types) {
    const RootSystem& rs = root_system(t);
    auto phi = full_system(rs);
    std::set<std::vector<std::vector<int>>> images;
    std::size_t count = 0;
    for_each_weyl(t, [&](const WeylElement& w) {
      ++count;
      std::vector<std::vector<int>> img;
      for (const auto& r : rs.positive()) {
        Eigen::VectorXi v = w.apply(r.coords);
        auto it = phi.find(key(v));
        REQUIRE(it != phi.end());
        CHECK(it->second == r.mult_class);
        img.push_back(key(v));
      }
      images.insert(img);
      return true;
    });
    CHECK(count == weyl_order(t));
    CHECK(images.size() == count);  // elements are distinct
  }
}
