#include "doctest.h"
#include "orbital/error.hpp"
#include "orbital/subsystems.hpp"

#include <map>
#include <random>
#include <set>

using namespace orbital;

namespace {

ChamberPoint euclid(std::vector<int> xs) {
  ChamberPoint p;
  p.coords.resize(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) p.coords(static_cast<Eigen::Index>(i)) = xs[i];
  return p;
}

std::set<std::vector<int>> coord_set(LieType t, const RootSet& s) {
  std::set<std::vector<int>> out;
  for (std::size_t i : s) {
    const auto& c = positive_roots(t)[i].coords;
    out.insert({c.data(), c.data() + c.size()});
  }
  return out;
}

// Brute force: every subset of Φ⁺ that equals Φ⁺ ∩ span(itself), keep the
// proper ones that no other proper closed subset strictly contains.
std::set<RootSet> brute_force_maximal(LieType t) {
  const std::size_t n = positive_roots(t).size();
  std::set<RootSet> closed;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    RootSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (s.size() == n) continue;
    if (span_closure(t, s) == s) closed.insert(s);
  }
  std::set<RootSet> maximal;
  for (const auto& s : closed) {
    bool dominated = false;
    for (const auto& o : closed)
      if (o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.insert(s);
  }
  return maximal;
}

std::vector<LieType> small_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::BC, 1}, {Family::BC, 2}, {Family::BC, 3},
          {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::A, 4}, {Family::D, 4}};
}

}  // namespace

TEST_CASE("annihilator examples") {
  LieType bc3{Family::BC, 3};
  auto ann = annihilator(euclid({2, 1, 1}), bc3);
  CHECK(coord_set(bc3, ann.roots) == std::set<std::vector<int>>{{0, 1, -1}});
  CHECK(annihilator(euclid({3, 2, 1}), bc3).regular());
  CHECK_THROWS_AS(annihilator(euclid({1, 1, 1, 1}), {Family::A, 3}), NormalizerElement);
  CHECK_THROWS_AS(annihilator(euclid({0, 0, 0}), bc3), NormalizerElement);
}

TEST_CASE("BC2 maximal subsystems are the four of the base case") {
  LieType bc2{Family::BC, 2};
  auto list = maximal_subsystems(bc2);
  std::set<std::set<std::vector<int>>> got;
  for (const auto& s : list) got.insert(coord_set(bc2, s.roots));
  std::set<std::set<std::vector<int>>> want = {
      {{1, 0}, {2, 0}}, {{0, 1}, {0, 2}}, {{1, -1}}, {{1, 1}}};
  CHECK(got == want);
  CHECK(list.size() == 4);
  CHECK(list[0].type_name() == "BC1");
  CHECK(list[2].type_name() == "A1");
}

TEST_CASE("BC3 families and counts") {
  auto list = maximal_subsystems({Family::BC, 3});
  std::map<std::string, int> by_type;
  std::map<Witness::Kind, int> by_kind;
  for (const auto& s : list) {
    ++by_type[s.type_name()];
    ++by_kind[s.witness.kind];
  }
  CHECK(by_type["BC2"] == 3);
  CHECK(by_type["A2"] == 4);
  CHECK(by_type["BC1×A1"] == 6);
  CHECK(by_kind[Witness::Kind::OMIT_INDEX] == 3);
  CHECK(by_kind[Witness::Kind::SIGN_VECTOR] == 4);
  CHECK(by_kind[Witness::Kind::INDEX_SPLIT] == 6);
  for (const auto& s : list)
    if (s.witness.kind == Witness::Kind::SIGN_VECTOR) CHECK(s.witness.signs[0] == 1);
}

TEST_CASE("A2 maximal subsystems are its three A1") {
  LieType a2{Family::A, 2};
  auto list = maximal_subsystems(a2);
  REQUIRE(list.size() == 3);
  for (const auto& s : list) {
    CHECK(s.roots.size() == 1);
    CHECK(s.type_name() == "A1");
  }
}

TEST_CASE("every enumerated subsystem is maximal and matches its type") {
  for (const auto& t : small_types()) {
    for (const auto& s : maximal_subsystems(t)) {
      CAPTURE(to_string(t));
      CAPTURE(s.type_name());
      CHECK(is_maximal(t, s.roots));
      CHECK(s.roots.size() < positive_roots(t).size());
      std::size_t expect = 0;
      for (const auto& c : s.components) expect += positive_roots(c).size();
      CHECK(s.roots.size() == expect);
      CHECK(span_rank(t, s.roots) == t.rank - 1);
    }
  }
}

TEST_CASE("brute force finds no maximal subsystem outside the list") {
  for (const auto& t : small_types()) {
    CAPTURE(to_string(t));
    std::set<RootSet> listed;
    for (const auto& s : maximal_subsystems(t)) listed.insert(s.roots);
    CHECK(brute_force_maximal(t) == listed);
  }
}

TEST_CASE("additive closure differs from span closure") {
  // In BC3, BC1×A1 plus e2+e3 closes additively to the proper BC1×C2.
  LieType bc3{Family::BC, 3};
  const RootSystem& rs = root_system(bc3);
  auto idx = [&](std::vector<int> c) {
    return rs.find(Eigen::Map<Eigen::VectorXi>(c.data(), 3))->first;
  };
  RootSet s = {idx({1, 0, 0}), idx({2, 0, 0}), idx({0, 1, -1}), idx({0, 1, 1})};
  std::sort(s.begin(), s.end());
  CHECK(additive_closure(bc3, s).size() == 6);
  CHECK(span_closure(bc3, s).size() == rs.positive().size());
}

TEST_CASE("annihilators are additively and span closed") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (const auto& t : small_types()) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> a(rs.ambient_dim());
      for (int& x : a) x = coord(rng);
      AnnihilatorSet ann;
      try {
        ann = annihilator(euclid(a), t);
      } catch (const NormalizerElement&) {
        continue;
      }
      CHECK(additive_closure(t, ann.roots) == ann.roots);
      CHECK(span_closure(t, ann.roots) == ann.roots);
    }
  }
}

TEST_CASE("containing_maximal") {
  LieType bc3{Family::BC, 3};
  auto ann = annihilator(euclid({2, 1, 1}), bc3);
  auto s = containing_maximal(ann);
  CHECK(std::includes(s.roots.begin(), s.roots.end(), ann.roots.begin(), ann.roots.end()));
  CHECK(s.witness.kind == Witness::Kind::OMIT_INDEX);
  CHECK(s.witness.omitted == 1);

  LieType bc2{Family::BC, 2};
  auto ann2 = annihilator(euclid({1, 0}), bc2);
  CHECK(coord_set(bc2, containing_maximal(ann2).roots) == std::set<std::vector<int>>{{0, 1}, {0, 2}});

  auto reg = annihilator(euclid({3, 2, 1}), bc3);
  CHECK(containing_maximal(reg).roots == maximal_subsystems(bc3).front().roots);
}

TEST_CASE("random annihilators lie in an enumerated maximal subsystem") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (const auto& t : small_types()) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> a(rs.ambient_dim());
      for (int& x : a) x = coord(rng);
      try {
        auto ann = annihilator(euclid(a), t);
        auto s = containing_maximal(ann);
        CHECK(std::includes(s.roots.begin(), s.roots.end(), ann.roots.begin(), ann.roots.end()));
      } catch (const NormalizerElement&) {
      }
    }
  }
}

TEST_CASE("Weyl covariance of annihilators") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (LieType t : {LieType{Family::A, 2}, LieType{Family::A, 3}, LieType{Family::BC, 2}, LieType{Family::BC, 3},
                    LieType{Family::B, 3}, LieType{Family::C, 3}}) {
    const RootSystem& rs = root_system(t);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> a(rs.ambient_dim());
      for (int& x : a) x = coord(rng);
      AnnihilatorSet ann;
      try {
        ann = annihilator(euclid(a), t);
      } catch (const NormalizerElement&) {
        continue;
      }
      for_each_weyl(t, [&](const WeylElement& w) {
        ChamberPoint wa{w.apply(ann.source_point.coords), Basis::EUCLIDEAN};
        RootSet direct = annihilator(wa, t).roots;
        RootSet moved;
        for (std::size_t i : ann.roots) moved.push_back(rs.find(w.apply(rs.positive()[i].coords))->first);
        std::sort(moved.begin(), moved.end());
        CHECK(direct == moved);
        return true;
      });
    }
  }
}

TEST_CASE("exceptional families are not enumerated") {
  CHECK_THROWS_AS(maximal_subsystems({Family::G2, 2}), Unsupported);
}
