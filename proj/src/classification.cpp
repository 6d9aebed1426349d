#include "sdrep/classification.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sdrep/ffl.hpp"
#include "sdrep/submodule.hpp"

namespace sdrep {

JSet to_jset(const MSet& m) { return JSet{m.mu0, m.M1, m.Mk}; }
MSet to_mset(const JSet& j) { return MSet{j.mu0, j.J1, j.Jk}; }

std::vector<std::string> mset_violations(const MSet& m) { return jset_law_violations(to_jset(m)); }

bool validate_mset(const MSet& m) { return mset_violations(m).empty(); }

Weight lambda_from_mset(const MSet& m) {
  const auto v = mset_violations(m);
  if (!v.empty()) throw std::invalid_argument("invalid MSet: " + v.front());
  std::vector<int> coords{m.M1 - 1};
  coords.insert(coords.end(), m.mu0.coords.begin(), m.mu0.coords.end());
  return Weight(coords);
}

std::vector<MSet> enumerate_msets(int n, int mu_max, int value_max) {
  if (n < 1 || mu_max < 0 || value_max < 1) throw std::invalid_argument("bad enumeration bounds");
  std::vector<MSet> out;
  MSet cur;

  // Assigns values to the tuples of level k, then recurses into level k + 1.
  std::function<void(int, const std::vector<std::vector<int>>&, std::size_t)> assign =
      [&](int k, const std::vector<std::vector<int>>& tuples, std::size_t idx) {
        if (idx == tuples.size()) {
          for (const auto& t : tuples)
            for (const auto& u : tuples) {
              bool below = true;
              for (std::size_t l = 0; l < t.size(); ++l)
                if (u[l] > t[l]) below = false;
              if (below && cur.Mk.at(t) > cur.Mk.at(u)) return;
            }
          if (k == n + 1) {
            out.push_back(cur);
            return;
          }
          std::vector<std::vector<int>> next;
          for (const auto& t : tuples)
            for (int i = 0; i < cur.Mk.at(t); ++i) {
              auto u = t;
              u.push_back(i);
              next.push_back(u);
            }
          assign(k + 1, next, 0);
          return;
        }
        const int cap = std::min(value_max, cur.mu0.component(k - 1) + 1);
        for (int v = 1; v <= cap; ++v) {
          cur.Mk[tuples[idx]] = v;
          assign(k, tuples, idx + 1);
        }
        cur.Mk.erase(tuples[idx]);
      };

  std::vector<int> mu(n, 0);
  std::function<void(int)> over_mu = [&](int pos) {
    if (pos == n) {
      cur = MSet{Weight(mu), 0, {}};
      for (int m1 = 1; m1 <= value_max; ++m1) {
        cur.M1 = m1;
        cur.Mk.clear();
        std::vector<std::vector<int>> level;
        for (int i = 0; i < m1; ++i) level.push_back({i});
        assign(2, level, 0);
      }
      return;
    }
    for (int c = 0; c <= mu_max; ++c) {
      mu[pos] = c;
      over_mu(pos + 1);
    }
  };
  over_mu(0);
  return out;
}

QuotientSpec quotient_spec(const MSet& m) {
  QuotientSpec spec{lambda_from_mset(m), {}};
  for (const auto& [t, v] : m.Mk) {
    const int k = static_cast<int>(t.size());
    if (v < spec.lambda.component(k + 1) + 1) spec.cut_generators.push_back({t, v});
  }
  return spec;
}

SpanHandle cut_submodule(const SemidirectModule& mod, const QuotientSpec& spec) {
  const auto gen = find_generator(mod);
  if (!gen) throw std::invalid_argument("module has no cyclic highest weight generator");
  std::vector<SparseVector> seeds;
  for (const auto& c : spec.cut_generators) {
    HWVRecord u = chain_vector(mod, *gen, c.tuple);
    const int level = static_cast<int>(c.tuple.size()) + 1;
    for (int e = 0; e < c.exponent && !u.vector.is_zero(); ++e) u = phi_record(mod, u, level);
    if (!u.vector.is_zero()) seeds.push_back(u.vector);
  }
  return generated_submodule(mod.base, seeds);
}

SemidirectModule build_quotient(const SemidirectModule& mod, const MSet& m) {
  const QuotientSpec spec = quotient_spec(m);
  if (!mod.provenance || mod.provenance->embedding != Embedding::Phi || mod.provenance->lambda != spec.lambda)
    throw std::invalid_argument("module is not V(lambda) restricted along Phi for lambda = " +
                                spec.lambda.to_string());
  if (!mod.generator) throw std::invalid_argument("module has no recorded generator");
  const SpanHandle w = cut_submodule(mod, spec);
  SemidirectModule out;
  out.base = quotient_module(mod.base, w);
  out.generator = w.project_to_quotient(*mod.generator);
  return out;
}

std::vector<Weight> decomposition_multiplicities(const SemidirectModule& mod) {
  std::vector<Weight> out;
  std::uint64_t total = 0;
  for (const auto& h : sl_highest_weight_vectors(mod)) {
    out.push_back(h.weight);
    total += weyl_dim(h.weight);
  }
  if (total != mod.dim()) throw std::logic_error("highest weights do not account for the dimension");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> branching_multiset(const Weight& lambda) {
  if (!lambda.is_dominant() || lambda.rank() < 2) throw std::invalid_argument("need a dominant sl(n+2) weight");
  const int n = lambda.rank() - 1;
  std::vector<Weight> out;
  std::vector<int> k(n + 2, 0);
  std::function<void(int)> rec = [&](int l) {
    if (l > n + 1) {
      Weight w = Weight::zero(n);
      for (int i = 1; i <= n; ++i) w.coords[i - 1] = lambda.component(i + 1) + k[i] - k[i + 1];
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= lambda.component(l); ++v) {
      k[l] = v;
      rec(l + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Layer> jordan_holder_profile(const SemidirectModule& mod) {
  std::vector<Layer> out;
  RepModule cur = mod.base;
  while (cur.dim() > 0) {
    std::vector<SparseVector> images;
    for (const auto& p : cur.algebra.radical())
      for (std::size_t c = 0; c < cur.dim(); ++c) {
        SparseVector y = cur.act(p).column(c);
        if (!y.is_zero()) images.push_back(std::move(y));
      }
    const SpanHandle radical_image = generated_submodule(cur, images);
    const RepModule top = quotient_module(cur, radical_image);
    const auto hwvs = highest_weight_vectors(top, top.algebra.raising());
    if (hwvs.empty()) throw std::logic_error("nonzero module without highest weight vectors");

    std::size_t pick = 0;
    for (std::size_t i = 1; i < hwvs.size(); ++i)
      if (weyl_dim(hwvs[i].weight) < weyl_dim(hwvs[pick].weight)) pick = i;

    const auto free = radical_image.free_columns();
    std::vector<SparseVector> seeds = radical_image.basis();
    for (std::size_t i = 0; i < hwvs.size(); ++i) {
      if (i == pick) continue;
      std::vector<SparseVector::Entry> e;
      for (const auto& [j, x] : hwvs[i].vector.entries()) e.emplace_back(free[j], x);
      seeds.push_back(SparseVector::from_entries(cur.dim(), std::move(e)));
    }
    const SpanHandle maximal = generated_submodule(cur, seeds);
    const std::size_t layer_dim = cur.dim() - maximal.rank();
    if (layer_dim != weyl_dim(hwvs[pick].weight)) throw std::logic_error("composition factor is not simple");
    out.push_back({layer_dim, {hwvs[pick].weight}});
    cur = submodule_module(cur, maximal);
  }
  return out;
}

bool labels_equal(const JSet& a, const JSet& b) { return a == b; }

}  // namespace sdrep
