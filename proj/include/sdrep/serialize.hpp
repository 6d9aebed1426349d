#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sdrep/classification.hpp"

namespace sdrep {

using ojson = nlohmann::ordered_json;

ojson weight_to_json(const Weight& w);
Weight weight_from_json(const ojson& j);

// {"mu0":[..],"J1":x,"J":{"2":{"[0]":..},...}}
ojson jset_to_json(const JSet& j);
JSet jset_from_json(const ojson& j);
std::string serialize_jset(const JSet& j);
JSet parse_jset(const std::string& text);

// {"mu0":[..],"M1":x,"Mk":{"2":{"[0]":..},...}}; tuple keys may use () or [].
ojson mset_to_json(const MSet& m);
MSet mset_from_json(const ojson& j);
std::string serialize_mset(const MSet& m);
MSet parse_mset(const std::string& text);

std::string tuple_key(const std::vector<int>& t);
std::vector<int> parse_tuple_key(const std::string& key);

}  // namespace sdrep
