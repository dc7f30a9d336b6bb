#include "orbital/json.hpp"

namespace orbital {
namespace {

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) return to_json(*v);
  else return *v;
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

json to_json(const ChamberPoint& p) {
  json coords = json::array();
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) coords.push_back(p.coords(i).str());
  return {{"basis", p.basis == Basis::EUCLIDEAN ? "euclidean" : "fundamental"}, {"coords", coords}};
}

json to_json(const SpaceDescriptor& s) {
  return {{"class", to_string(s.cartan_class)},
          {"lie_type", to_string(s.lie_type)},
          {"rank", s.rank()},
          {"params", {{"p", opt(s.params.p)}, {"n", opt(s.params.n)}}},
          {"mults", {s.mults.eta0, s.mults.eta1, s.mults.eta2}},
          {"dim", s.dim_gk}};
}

json to_json(const ChartRow& r) {
  return {{"chart", r.chart}, {"root_type", r.root_type}, {"class", r.cartan},
          {"dim", r.dim},     {"mults", r.mults},         {"regime", r.regime}};
}

json to_json(const Gate& g) {
  return {{"k_gate", to_json(g.value)}, {"strict", g.strict}, {"min_k", g.min_k()}, {"rule", g.rule}};
}

json to_json(const L2Result& r) { return {{"verdict", to_string(r.verdict)}, {"rule", r.rule}}; }

json to_json(const RhoOracleResult& r) {
  json j = {{"formula", r.formula},         {"sharp", r.sharp},       {"minimum", r.minimum},
            {"argmin", to_json(r.argmin)},  {"probes", r.probes},     {"bound_holds", r.bound_holds},
            {"attained", r.attained},       {"violation", nullptr}};
  if (r.violation) j["violation"] = to_json(*r.violation);
  return j;
}

json to_json(const SubsystemDescriptor& s) {
  json w = {{"kind", to_string(s.witness.kind)}};
  switch (s.witness.kind) {
    case Witness::Kind::OMIT_INDEX: w["omitted"] = s.witness.omitted; break;
    case Witness::Kind::SIGN_VECTOR: w["signs"] = s.witness.signs; break;
    case Witness::Kind::INDEX_SPLIT:
      w["I"] = s.witness.I;
      w["J"] = s.witness.J;
      w["signs"] = s.witness.signs;
      break;
  }
  return {{"ambient", to_string(s.ambient)}, {"type", s.type_name()}, {"roots", s.roots}, {"witness", w}};
}

json to_json(const DecayReport& r) {
  json j = {{"space", to_json(r.space)},
            {"k", r.k},
            {"regular", r.regular},
            {"rho", opt(r.rho)},
            {"rho_sharp", opt(r.rho_sharp)},
            {"p_k", opt(r.p_k)},
            {"kappa", opt(r.kappa)},
            {"kappa2", opt(r.kappa2)},
            {"s", opt(r.s)},
            {"m", opt(r.m)},
            {"M", opt(r.M)},
            {"q", opt(r.q)},
            {"k_gate", to_json(r.k_gate)},
            {"regular_threshold", r.regular_threshold},
            {"l2", to_json(r.l2)},
            {"diff", nullptr},
            {"rules_applied", r.rules_applied}};
  if (r.diff) j["diff"] = {{"order", r.diff->order}, {"rule", r.diff->rule}};
  return j;
}

json to_json(const PlancherelFit& f) {
  json samples = json::array();
  for (const auto& [L, F] : f.samples) samples.push_back({L, F});
  return {{"k", f.k},
          {"t", f.t},
          {"samples", samples},
          {"slope", f.slope},
          {"intercept", f.intercept},
          {"residual", f.residual},
          {"increment_ratios", f.increment_ratios},
          {"verdict", to_string(f.verdict)}};
}

}  // namespace orbital
