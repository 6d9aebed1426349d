#include <functional>
#include <stdexcept>

#include "sdrep/restriction.hpp"

namespace sdrep {

std::optional<int> JSet::value(const std::vector<int>& prefix) const {
  if (prefix.empty()) return J1;
  auto it = Jk.find(prefix);
  if (it == Jk.end()) return std::nullopt;
  return it->second;
}

HWVRecord chain_vector(const SemidirectModule& mod, const HWVRecord& gen, const std::vector<int>& tuple) {
  HWVRecord cur = gen;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] < 0) throw std::invalid_argument("negative exponent in chain tuple");
    for (int t = 0; t < tuple[k]; ++t) cur = phi_record(mod, cur, static_cast<int>(k) + 1);
  }
  return cur;
}

JSet compute_jset(const SemidirectModule& mod, const HWVRecord& gen) {
  require_hwv(mod, gen);
  if (!check_cyclic(mod, gen.vector)) throw std::invalid_argument("generator does not generate the module");
  const int n = mod.rank();
  JSet out;
  out.mu0 = gen.weight;

  std::function<void(int, std::vector<int>&, const HWVRecord&)> explore =
      [&](int k, std::vector<int>& prefix, const HWVRecord& w) {
        std::vector<HWVRecord> powers{w};
        while (!powers.back().vector.is_zero()) {
          if (powers.size() > mod.dim() + 1) throw std::logic_error("phi is not nilpotent");
          powers.push_back(phi_record(mod, powers.back(), k));
        }
        const int j = static_cast<int>(powers.size()) - 1;
        if (k == 1)
          out.J1 = j;
        else
          out.Jk[prefix] = j;
        if (k == n + 1) return;
        for (int i = 0; i < j; ++i) {
          prefix.push_back(i);
          explore(k + 1, prefix, powers[i]);
          prefix.pop_back();
        }
      };
  std::vector<int> prefix;
  explore(1, prefix, gen);
  return out;
}

std::vector<std::string> jset_law_violations(const JSet& j) {
  std::vector<std::string> out;
  const int n = j.rank();
  auto key = [](const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  };
  if (n < 1) out.push_back("mu0 has rank 0");
  if (!j.mu0.is_dominant()) out.push_back("mu0 is not dominant");
  if (j.J1 < 1) out.push_back("J1 < 1");

  std::map<std::vector<int>, int> expected;
  std::vector<std::vector<int>> level{{}};
  std::map<std::vector<int>, int> values{{{}, j.J1}};
  for (int k = 2; k <= n + 1; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& t : level) {
      const int bound = values.at(t);
      for (int i = 0; i < bound; ++i) {
        std::vector<int> u = t;
        u.push_back(i);
        auto it = j.Jk.find(u);
        if (it == j.Jk.end()) {
          out.push_back("missing J" + std::to_string(k) + key(u));
          continue;
        }
        expected[u] = it->second;
        values[u] = it->second;
        next.push_back(u);
      }
    }
    for (const auto& t : next) {
      const int v = j.Jk.at(t);
      if (v < 1) out.push_back("J" + std::to_string(k) + key(t) + " < 1");
      if (v > j.mu0.component(k - 1) + 1)
        out.push_back("J" + std::to_string(k) + key(t) + " exceeds (mu0)_" + std::to_string(k - 1) + " + 1");
      for (const auto& u : next) {
        bool below = true;
        for (std::size_t l = 0; l < t.size(); ++l)
          if (u[l] > t[l]) below = false;
        if (below && j.Jk.at(t) > j.Jk.at(u))
          out.push_back("J" + std::to_string(k) + " not antitone at " + key(u) + " <= " + key(t));
      }
    }
    level = std::move(next);
  }
  for (const auto& [t, v] : j.Jk)
    if (!expected.count(t)) out.push_back("unexpected entry " + key(t));
  return out;
}

}  // namespace sdrep
