#include "orbital/catalog.hpp"

#include "orbital/error.hpp"

#include <algorithm>

namespace orbital {
namespace {

struct ClassName {
  CartanClass cls;
  const char* name;
};

constexpr ClassName kNames[] = {
    {CartanClass::AI, "AI"},       {CartanClass::AII, "AII"},     {CartanClass::AIII, "AIII"},
    {CartanClass::CI, "CI"},       {CartanClass::CII, "CII"},     {CartanClass::DIII_even, "DIII_even"},
    {CartanClass::DIII_odd, "DIII_odd"}, {CartanClass::BDI, "BDI"}, {CartanClass::EIII, "EIII"},
    {CartanClass::EIV, "EIV"},     {CartanClass::EVII, "EVII"},   {CartanClass::FII, "FII"},
    {CartanClass::G, "G"},         {CartanClass::EII, "EII"},     {CartanClass::EVI, "EVI"},
    {CartanClass::EIX, "EIX"},     {CartanClass::FI, "FI"},       {CartanClass::EI, "EI"},
    {CartanClass::EV, "EV"},       {CartanClass::EVIII, "EVIII"},
};

[[noreturn]] void bad_params(CartanClass c, const std::string& why) {
  throw InvalidArgument("invalid parameters for " + to_string(c) + ": " + why);
}

int need(CartanClass c, const std::optional<int>& v, const char* name) {
  if (!v) bad_params(c, std::string("missing ") + name);
  return *v;
}

SpaceDescriptor exceptional(CartanClass c, LieType t, Mults m, int dim, int listed) {
  SpaceDescriptor s;
  s.lie_type = t;
  s.cartan_class = c;
  s.mults = m;
  s.dim_gk = dim;
  s.listed = listed;
  return s;
}

}  // namespace

std::string to_string(CartanClass c) {
  for (const auto& e : kNames)
    if (e.cls == c) return e.name;
  return "?";
}

CartanClass parse_cartan_class(const std::string& text) {
  for (const auto& e : kNames)
    if (text == e.name) return e.cls;
  if (text == "DIII(even)" || text == "DIII-even") return CartanClass::DIII_even;
  if (text == "DIII(odd)" || text == "DIII-odd") return CartanClass::DIII_odd;
  throw InvalidArgument("unknown Cartan class '" + text + "'");
}

bool two_parameter(CartanClass c) {
  return c == CartanClass::AIII || c == CartanClass::CII || c == CartanClass::BDI;
}

int SpaceDescriptor::multiplicity(MultClass c) const {
  switch (c) {
    case MultClass::S0: return mults.eta0;
    case MultClass::S1: return mults.eta1;
    // C_n has no e_i; its long roots 2e_i carry the listed short-slot value.
    case MultClass::S2: return lie_type.family == Family::C ? mults.eta1 + mults.eta2 : mults.eta2;
    case MultClass::EXC_0: return mults.eta0;
    case MultClass::EXC_1: return listed == 1 ? mults.eta0 : mults.eta1;
  }
  return 0;
}

std::string SpaceDescriptor::label() const {
  std::string s = to_string(cartan_class);
  if (params.p && params.n) return s + "(p=" + std::to_string(*params.p) + ",n=" + std::to_string(*params.n) + ")";
  if (params.n) return s + "(n=" + std::to_string(*params.n) + ")";
  return s;
}

SpaceDescriptor lookup(CartanClass c, Params params) {
  const bool has_p = params.p.has_value();
  switch (c) {
    case CartanClass::EIII: case CartanClass::EIV: case CartanClass::EVII: case CartanClass::FII:
    case CartanClass::G: case CartanClass::EII: case CartanClass::EVI: case CartanClass::EIX:
    case CartanClass::FI: case CartanClass::EI: case CartanClass::EV: case CartanClass::EVIII:
      if (has_p || params.n) bad_params(c, "class takes no parameters");
      break;
    default:
      if (has_p && !two_parameter(c)) bad_params(c, "class takes no p");
      break;
  }

  switch (c) {
    case CartanClass::EIII: return exceptional(c, {Family::BC, 2}, {8, 6, 1}, 32, 3);
    case CartanClass::EIV: return exceptional(c, {Family::A, 2}, {8, 0, 0}, 26, 1);
    case CartanClass::EVII: return exceptional(c, {Family::C, 3}, {8, 1, 0}, 54, 2);
    case CartanClass::FII: return exceptional(c, {Family::BC, 1}, {0, 8, 7}, 16, 2);
    case CartanClass::G: return exceptional(c, {Family::G2, 2}, {1, 0, 0}, 8, 1);
    case CartanClass::EII: return exceptional(c, {Family::F4, 4}, {1, 2, 0}, 40, 2);
    case CartanClass::EVI: return exceptional(c, {Family::F4, 4}, {1, 4, 0}, 64, 2);
    case CartanClass::EIX: return exceptional(c, {Family::F4, 4}, {8, 1, 0}, 112, 2);
    case CartanClass::FI: return exceptional(c, {Family::F4, 4}, {1, 0, 0}, 28, 1);
    case CartanClass::EI: return exceptional(c, {Family::E6, 6}, {1, 0, 0}, 42, 1);
    case CartanClass::EV: return exceptional(c, {Family::E7, 7}, {1, 0, 0}, 70, 1);
    case CartanClass::EVIII: return exceptional(c, {Family::E8, 8}, {1, 0, 0}, 128, 1);
    default: break;
  }

  const int n = need(c, params.n, "n");
  SpaceDescriptor s;
  s.cartan_class = c;
  s.params.n = n;
  s.listed = 3;
  auto set = [&](LieType t, Mults m, int dim) {
    try {
      t.validate();
    } catch (const InvalidArgument& e) {
      bad_params(c, e.what());
    }
    s.lie_type = t;
    s.mults = m;
    s.dim_gk = dim;
  };

  switch (c) {
    case CartanClass::AI:
      if (n < 2) bad_params(c, "n must be >= 2");
      set({Family::A, n - 1}, {1, 0, 0}, (n - 1) * (n + 2) / 2);
      break;
    case CartanClass::AII:
      if (n < 2) bad_params(c, "n must be >= 2");
      set({Family::A, n - 1}, {4, 0, 0}, (n - 1) * (2 * n + 1));
      break;
    case CartanClass::AIII:
    case CartanClass::CII: {
      const int p = need(c, params.p, "p");
      if (n < 1 || p < n) bad_params(c, "need p >= n >= 1");
      s.params.p = p;
      const int f = c == CartanClass::AIII ? 2 : 4;
      const Mults m = c == CartanClass::AIII ? Mults{2, 1, 2 * (p - n)} : Mults{4, 3, 4 * (p - n)};
      set({p > n ? Family::BC : Family::C, n}, m, f * p * n);
      break;
    }
    case CartanClass::CI:
      set({Family::C, n}, {1, 1, 0}, n * (n + 1));
      break;
    case CartanClass::DIII_even:
      set({Family::C, n}, {4, 1, 0}, 2 * n * (2 * n - 1));
      break;
    case CartanClass::DIII_odd:
      if (n < 1) bad_params(c, "n must be >= 1");
      set({Family::BC, n}, {4, 1, 4}, 2 * n * (2 * n + 1));
      break;
    case CartanClass::BDI: {
      const int p = need(c, params.p, "p");
      if (n < 1 || p < n) bad_params(c, "need p >= n >= 1");
      s.params.p = p;
      // p - n lives in the e_i slot: for B_n the short roots are e_i.
      if (p > n)
        set({Family::B, n}, {1, p - n, 0}, p * n);
      else
        set({Family::D, n}, {1, 0, 0}, p * n);
      break;
    }
    default:
      throw InvalidArgument("unknown Cartan class");
  }
  return s;
}

SpaceDescriptor lookup_by_rank(CartanClass c, std::optional<int> rank, std::optional<int> p) {
  Params params;
  params.p = p;
  const bool fixed = static_cast<int>(c) >= static_cast<int>(CartanClass::EIII);
  if (rank && !fixed) params.n = (c == CartanClass::AI || c == CartanClass::AII) ? *rank + 1 : *rank;
  SpaceDescriptor s = lookup(c, params);
  if (rank && s.rank() != *rank) bad_params(c, "class has fixed rank " + std::to_string(s.rank()));
  return s;
}

std::vector<SpaceDescriptor> all_spaces(int max_rank) {
  if (max_rank < 1) throw InvalidArgument("max_rank must be >= 1");
  std::vector<SpaceDescriptor> out;
  auto try_add = [&](CartanClass c, Params params) {
    try {
      out.push_back(lookup(c, params));
    } catch (const InvalidArgument&) {
      // inadmissible at this rank
    }
  };
  for (int r = 1; r <= max_rank; ++r) {
    try_add(CartanClass::AI, {std::nullopt, r + 1});
    try_add(CartanClass::AII, {std::nullopt, r + 1});
    for (CartanClass c : {CartanClass::AIII, CartanClass::CII})
      for (int p = r; p <= r + 2; ++p) try_add(c, {p, r});
    try_add(CartanClass::CI, {std::nullopt, r});
    try_add(CartanClass::DIII_even, {std::nullopt, r});
    try_add(CartanClass::DIII_odd, {std::nullopt, r});
    for (int p = r; p <= r + 2; ++p) try_add(CartanClass::BDI, {p, r});
    for (CartanClass c : {CartanClass::EIII, CartanClass::EIV, CartanClass::EVII, CartanClass::FII,
                          CartanClass::G, CartanClass::EII, CartanClass::EVI, CartanClass::EIX,
                          CartanClass::FI, CartanClass::EI, CartanClass::EV, CartanClass::EVIII}) {
      SpaceDescriptor s = lookup(c);
      if (s.rank() == r) out.push_back(s);
    }
  }
  return out;
}

const std::vector<ChartRow>& chart_rows() {
  using C = CartanClass;
  static const std::vector<ChartRow> rows = {
      {1, "A_{n-1}", "AI", "(n-1)(n+2)/2", "1;0;0", C::AI, ""},
      {1, "A_{n-1}", "AII", "(n-1)(2n+1)", "4;0;0", C::AII, ""},
      {1, "BC_{n}", "AIII", "2pn", "2;1;2(p-n)", C::AIII, "p>n"},
      {1, "C_{n}", "AIII", "2pn", "2;1;2(p-n)", C::AIII, "p=n"},
      {1, "C_{n}", "CI", "n(n+1)", "1;1;0", C::CI, ""},
      {1, "BC_{n}", "CII", "4pn", "4;3;4(p-n)", C::CII, "p>n"},
      {1, "C_{n}", "CII", "4pn", "4;3;4(p-n)", C::CII, "p=n"},
      {1, "C_{n}", "DIII (even)", "2n(2n-1)", "4;1;0", C::DIII_even, ""},
      {1, "BC_{n}", "DIII (odd)", "2n(2n+1)", "4;1;4", C::DIII_odd, ""},
      {1, "B_{n}", "BDI", "pn", "1;0;p-n", C::BDI, "p>n"},
      {1, "D_{n}", "BDI", "pn", "1;0;p-n", C::BDI, "p=n"},
      {2, "BC_{2}", "EIII", "32", "8;6;1", C::EIII, ""},
      {2, "A_{2}", "EIV", "26", "8", C::EIV, ""},
      {2, "C_{3}", "EVII", "54", "8;1", C::EVII, ""},
      {2, "BC_{1}", "FII", "16", "8;7", C::FII, ""},
      {3, "G_{2}", "G", "8", "1", C::G, ""},
      {3, "F_{4}", "EII", "40", "1,2", C::EII, ""},
      {3, "F_{4}", "EVI", "64", "1,4", C::EVI, ""},
      {3, "F_{4}", "EIX", "112", "8,1", C::EIX, ""},
      {3, "F_{4}", "FI", "28", "1", C::FI, ""},
      {3, "E_{6}", "EI", "42", "1", C::EI, ""},
      {3, "E_{7}", "EV", "70", "1", C::EV, ""},
      {3, "E_{8}", "EVIII", "128", "1", C::EVIII, ""},
  };
  return rows;
}

int dimension_from_roots(const SpaceDescriptor& s) {
  int d = s.rank();
  for (const auto& r : positive_roots(s.lie_type)) d += s.multiplicity(r.mult_class);
  return d;
}

}  // namespace orbital
