#include "doctest.h"
#include "orbital/catalog.hpp"
#include "orbital/error.hpp"

#include <functional>
#include <map>
#include <set>

using namespace orbital;

TEST_CASE("lookup examples") {
  auto s = lookup(CartanClass::AIII, {5, 3});
  CHECK(s.lie_type == LieType{Family::BC, 3});
  CHECK(s.mults == Mults{2, 1, 4});
  CHECK(s.dim_gk == 30);

  auto ai = lookup(CartanClass::AI, {std::nullopt, 4});
  CHECK(ai.lie_type == LieType{Family::A, 3});
  CHECK(ai.mults == Mults{1, 0, 0});
  CHECK(ai.dim_gk == 9);

  auto fii = lookup(CartanClass::FII);
  CHECK(fii.lie_type == LieType{Family::BC, 1});
  CHECK(fii.mults == Mults{0, 8, 7});
  CHECK(fii.dim_gk == 16);
}

TEST_CASE("parameter regimes") {
  CHECK(lookup(CartanClass::AIII, {3, 3}).lie_type == LieType{Family::C, 3});
  CHECK(lookup(CartanClass::AIII, {3, 3}).mults.eta2 == 0);
  CHECK(lookup(CartanClass::CII, {4, 2}).lie_type == LieType{Family::BC, 2});
  CHECK(lookup(CartanClass::CII, {2, 2}).lie_type == LieType{Family::C, 2});
  CHECK(lookup(CartanClass::BDI, {7, 3}).lie_type == LieType{Family::B, 3});
  CHECK(lookup(CartanClass::BDI, {7, 3}).mults == Mults{1, 4, 0});
  CHECK(lookup(CartanClass::BDI, {5, 5}).lie_type == LieType{Family::D, 5});
  CHECK(lookup(CartanClass::DIII_even, {std::nullopt, 3}).lie_type == LieType{Family::C, 3});
  CHECK(lookup(CartanClass::DIII_odd, {std::nullopt, 3}).lie_type == LieType{Family::BC, 3});
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(lookup(CartanClass::AIII, {2, 3}), InvalidArgument);
  CHECK_THROWS_AS(lookup(CartanClass::AIII, {std::nullopt, 3}), InvalidArgument);
  CHECK_THROWS_AS(lookup(CartanClass::AI, {std::nullopt, 1}), InvalidArgument);
  CHECK_THROWS_AS(lookup(CartanClass::AI, {3, 3}), InvalidArgument);
  CHECK_THROWS_AS(lookup(CartanClass::EIX, {std::nullopt, 4}), InvalidArgument);
  CHECK_THROWS_AS(lookup(CartanClass::CI, {std::nullopt, 1}), InvalidArgument);  // C_1
  CHECK_THROWS_AS(lookup(CartanClass::BDI, {3, 3}), InvalidArgument);            // D_3
  CHECK_THROWS_AS(lookup(CartanClass::BDI, {3, 1}), InvalidArgument);            // B_1
  CHECK_THROWS_AS(parse_cartan_class("AIV"), InvalidArgument);
  CHECK(parse_cartan_class("DIII(odd)") == CartanClass::DIII_odd);
}

TEST_CASE("lookup by rank") {
  CHECK(lookup_by_rank(CartanClass::AI, 1).lie_type == LieType{Family::A, 1});
  CHECK(lookup_by_rank(CartanClass::EIX, std::nullopt).dim_gk == 112);
  CHECK(lookup_by_rank(CartanClass::EIX, 4).dim_gk == 112);
  CHECK_THROWS_AS(lookup_by_rank(CartanClass::EIX, 3), InvalidArgument);
}

TEST_CASE("all_spaces rank filter") {
  auto has = [](const std::vector<SpaceDescriptor>& v, CartanClass c, LieType t) {
    for (const auto& s : v)
      if (s.cartan_class == c && s.lie_type == t) return true;
    return false;
  };
  auto r1 = all_spaces(1);
  CHECK(has(r1, CartanClass::AI, {Family::A, 1}));
  CHECK(has(r1, CartanClass::FII, {Family::BC, 1}));
  for (const auto& s : r1) {
    CHECK(s.rank() == 1);
    CHECK(s.lie_type.family != Family::D);
  }
  auto r2 = all_spaces(2);
  bool eiii = false;
  for (const auto& s : r2)
    if (s.cartan_class == CartanClass::EIII) eiii = s.lie_type == LieType{Family::BC, 2} && s.mults == Mults{8, 6, 1};
  CHECK(eiii);
  auto r8 = all_spaces(8);
  bool e8 = false;
  for (const auto& s : r8)
    if (s.cartan_class == CartanClass::EVIII) e8 = s.dim_gk == 128 && s.lie_type.family == Family::E8;
  CHECK(e8);
  CHECK_THROWS_AS(all_spaces(0), InvalidArgument);
}

TEST_CASE("dimension identity holds for every row") {
  for (const auto& s : all_spaces(10)) {
    CAPTURE(s.label());
    CHECK(dimension_from_roots(s) == s.dim_gk);
  }
}

// Appendix formulas, transcribed independently of the catalog implementation.
TEST_CASE("chart rows agree with instantiated descriptors") {
  using F = std::function<int(int, int)>;
  const std::map<std::string, F> dim = {
      {"(n-1)(n+2)/2", [](int, int n) { return (n - 1) * (n + 2) / 2; }},
      {"(n-1)(2n+1)", [](int, int n) { return (n - 1) * (2 * n + 1); }},
      {"2pn", [](int p, int n) { return 2 * p * n; }},
      {"4pn", [](int p, int n) { return 4 * p * n; }},
      {"n(n+1)", [](int, int n) { return n * (n + 1); }},
      {"2n(2n-1)", [](int, int n) { return 2 * n * (2 * n - 1); }},
      {"2n(2n+1)", [](int, int n) { return 2 * n * (2 * n + 1); }},
      {"pn", [](int p, int n) { return p * n; }},
  };
  const auto& rows = chart_rows();
  CHECK(rows.size() == 23);
  std::set<std::string> seen_classes;
  for (const auto& row : rows) {
    CAPTURE(row.cartan);
    seen_classes.insert(to_string(row.cls));
    if (row.chart == 1) {
      for (int n = 1; n <= 6; ++n)
        for (int dp = 0; dp <= 2; ++dp) {
          int p = n + dp;
          if (row.regime == "p>n" && dp == 0) continue;
          if (row.regime == "p=n" && dp != 0) continue;
          if (!row.regime.empty() || dp == 0) {
            Params params{two_parameter(row.cls) ? std::optional<int>(p) : std::nullopt, n};
            SpaceDescriptor s;
            try {
              s = lookup(row.cls, params);
            } catch (const InvalidArgument&) {
              continue;
            }
            CHECK(s.dim_gk == dim.at(row.dim)(p, n));
            std::string fam = row.root_type.substr(0, row.root_type.find('_'));
            CHECK(family_name(s.lie_type.family) == fam);
          }
        }
    } else {
      SpaceDescriptor s = lookup(row.cls);
      CHECK(std::to_string(s.dim_gk) == row.dim);
      std::string t = row.root_type;
      t.erase(std::remove(t.begin(), t.end(), '_'), t.end());
      t.erase(std::remove(t.begin(), t.end(), '{'), t.end());
      t.erase(std::remove(t.begin(), t.end(), '}'), t.end());
      CHECK(t == (s.lie_type.exceptional() ? family_name(s.lie_type.family) : to_string(s.lie_type)));
    }
  }
  CHECK(seen_classes.size() == 20);
}

TEST_CASE("multiplicity attachment") {
  auto ci = lookup(CartanClass::CI, {std::nullopt, 3});
  CHECK(ci.multiplicity(MultClass::S2) == 1);
  auto eix = lookup(CartanClass::EIX);
  CHECK(eix.multiplicity(MultClass::EXC_0) == 8);
  CHECK(eix.multiplicity(MultClass::EXC_1) == 1);
  auto g = lookup(CartanClass::G);
  CHECK(g.multiplicity(MultClass::EXC_1) == 1);
  auto a3 = lookup(CartanClass::AIII, {5, 3});
  CHECK(a3.multiplicity(MultClass::S1) == 1);
  CHECK(a3.multiplicity(MultClass::S2) == 4);
}
