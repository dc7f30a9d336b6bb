#pragma once

#include "orbital/catalog.hpp"
#include "orbital/decay.hpp"
#include "orbital/rank1.hpp"
#include "orbital/subsystems.hpp"

#include <json.hpp>

namespace orbital {

using nlohmann::json;

/// Exact values serialize as strings ("3", "7/2") so nothing is rounded.
json to_json(const Rational& q);
json to_json(const ChamberPoint& p);
/// {class, lie_type, rank, params, mults, dim}
json to_json(const SpaceDescriptor& s);
json to_json(const ChartRow& r);
json to_json(const Gate& g);
json to_json(const L2Result& r);
json to_json(const RhoOracleResult& r);
json to_json(const SubsystemDescriptor& s);
json to_json(const DecayReport& r);
json to_json(const PlancherelFit& f);

}  // namespace orbital
