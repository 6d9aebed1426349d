#include "sdrep/serialize.hpp"

#include <stdexcept>

namespace sdrep {

namespace {

using Tree = std::map<std::vector<int>, int>;

ojson tree_to_json(const Tree& tree) {
  ojson out = ojson::object();
  std::map<int, std::vector<std::pair<std::vector<int>, int>>> levels;
  for (const auto& [t, v] : tree) levels[static_cast<int>(t.size()) + 1].emplace_back(t, v);
  for (const auto& [k, entries] : levels) {
    ojson level = ojson::object();
    for (const auto& [t, v] : entries) level[tuple_key(t)] = v;
    out[std::to_string(k)] = level;
  }
  return out;
}

Tree tree_from_json(const ojson& j) {
  if (!j.is_object()) throw std::invalid_argument("label tree must be an object");
  Tree out;
  for (const auto& [level_key, level] : j.items()) {
    const int k = std::stoi(level_key);
    if (!level.is_object()) throw std::invalid_argument("label level must be an object");
    for (const auto& [key, value] : level.items()) {
      auto t = parse_tuple_key(key);
      if (static_cast<int>(t.size()) + 1 != k)
        throw std::invalid_argument("tuple " + key + " does not belong to level " + level_key);
      if (!value.is_number_integer()) throw std::invalid_argument("label values must be integers");
      out[t] = value.get<int>();
    }
  }
  return out;
}

const ojson& member(const ojson& j, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (j.contains(n)) return j.at(n);
  throw std::invalid_argument(std::string("missing field ") + *names.begin());
}

}  // namespace

std::string tuple_key(const std::vector<int>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

std::vector<int> parse_tuple_key(const std::string& key) {
  std::vector<int> out;
  std::string cur;
  for (char c : key) {
    if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if ((c >= '0' && c <= '9') || c == '-') {
      cur += c;
    } else {
      throw std::invalid_argument("bad tuple key: " + key);
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.empty()) throw std::invalid_argument("empty tuple key");
  return out;
}

ojson weight_to_json(const Weight& w) { return ojson(w.coords); }

Weight weight_from_json(const ojson& j) {
  if (!j.is_array()) throw std::invalid_argument("weight must be an array");
  return Weight(j.get<std::vector<int>>());
}

ojson jset_to_json(const JSet& j) {
  ojson out = ojson::object();
  out["mu0"] = weight_to_json(j.mu0);
  out["J1"] = j.J1;
  out["J"] = tree_to_json(j.Jk);
  return out;
}

JSet jset_from_json(const ojson& j) {
  JSet out;
  out.mu0 = weight_from_json(member(j, {"mu0"}));
  out.J1 = member(j, {"J1"}).get<int>();
  out.Jk = tree_from_json(member(j, {"J", "Jk"}));
  return out;
}

std::string serialize_jset(const JSet& j) { return jset_to_json(j).dump(); }
JSet parse_jset(const std::string& text) { return jset_from_json(ojson::parse(text)); }

ojson mset_to_json(const MSet& m) {
  ojson out = ojson::object();
  out["mu0"] = weight_to_json(m.mu0);
  out["M1"] = m.M1;
  out["Mk"] = tree_to_json(m.Mk);
  return out;
}

MSet mset_from_json(const ojson& j) {
  MSet out;
  out.mu0 = weight_from_json(member(j, {"mu0"}));
  out.M1 = member(j, {"M1"}).get<int>();
  out.Mk = tree_from_json(member(j, {"Mk", "M"}));
  return out;
}

std::string serialize_mset(const MSet& m) { return mset_to_json(m).dump(); }
MSet parse_mset(const std::string& text) { return mset_from_json(ojson::parse(text)); }

}  // namespace sdrep
