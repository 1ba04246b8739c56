#pragma once

#include <json.hpp>

#include "springer/bernstein.hpp"
#include "springer/cuspidal.hpp"
#include "springer/weyl.hpp"

namespace springer {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const GroupLabel& g, const OrbitLabel& o);
OrbitLabel orbit_from_json(const json& j);

json to_json(const ComponentGroup& c);

json to_json(const LocalSystemLabel& l);
json to_json(const CuspidalDatum& d);
json to_json(const CuspidalSupport& s);

json to_json(const ExtendedWeylGroup& g, const ParabolicPair& p);
json to_json(const LeviLabel& l);
json to_json(const ExtendedWeylGroup& g, const MackeyTerm& t);

json to_json(const FiniteGroup& g);
FiniteGroup finite_group_from_json(const json& j);

json to_json(const Cocycle& k);
Cocycle cocycle_from_json(const json& j);

GroupAction action_from_json(const json& j);

// {"action": ..., "data": "trivial" | {...explicit...} | {"basepoints": ...}}
struct ExtQuotDocument {
    GroupAction action;
    TwistedQuotientData data;
};
ExtQuotDocument extquot_document_from_json(const json& j);
json to_json(const ExtendedQuotientPoint& p);

CatalogEntry catalog_entry_from_json(const json& j);
std::vector<CatalogEntry> catalog_from_json(const json& j);
json to_json(const Block& b);

// JSON schema text for the named input type; throws on unknown name
const char* input_schema(const std::string& name);
std::vector<std::string> schema_names();

} // namespace springer
