#include "sdrep/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "sdrep/ffl.hpp"

namespace sdrep {

void Report::add(std::string name, ojson params, ojson expected, ojson got) {
  const bool pass = expected == got;
  checks.push_back({std::move(name), std::move(params), std::move(expected), std::move(got), pass});
}

std::size_t Report::passed() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.pass ? 1 : 0;
  return k;
}

std::size_t Report::failed() const { return checks.size() - passed(); }

ojson Report::to_json() const {
  ojson out = ojson::object();
  out["suite"] = suite;
  ojson list = ojson::array();
  for (const auto& c : checks) {
    ojson j = ojson::object();
    j["name"] = c.name;
    j["params"] = c.params;
    j["expected"] = c.expected;
    j["got"] = c.got;
    j["pass"] = c.pass;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  out["summary"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  out["wall_time_s"] = wall_time_s;
  return out;
}

std::vector<Weight> weight_grid(int rank, int max) {
  std::vector<Weight> out;
  std::vector<int> c(rank, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == rank) {
      out.emplace_back(c);
      return;
    }
    for (int v = 0; v <= max; ++v) {
      c[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ffl",   "lie",       "standard",       "labels",
                                              "jlambda", "phi",     "structural",     "jlaws",
                                              "classification", "jordan-holder", "xi", "all"};
  return names;
}

namespace {

// ---------------------------------------------------------------------------
// Shared module cache; restricted modules are reused across suites.

const RepModule& irrep(int m, const Weight& lambda) {
  static std::map<std::pair<int, Weight>, RepModule> cache;
  auto key = std::make_pair(m, lambda);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_irrep(m, lambda)).first;
  return it->second;
}

const SemidirectModule& restricted(const Weight& lambda, Embedding emb) {
  static std::map<std::pair<Weight, int>, SemidirectModule> cache;
  auto key = std::make_pair(lambda, static_cast<int>(emb));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, restrict_module(irrep(lambda.rank() + 1, lambda), emb)).first;
  return it->second;
}

JSet label_of(const SemidirectModule& mod) {
  const auto gen = find_generator(mod);
  if (!gen) throw std::runtime_error("no cyclic highest weight generator");
  return compute_jset(mod, *gen);
}

const JSet& cached_label(const Weight& lambda, Embedding emb) {
  static std::map<std::pair<Weight, int>, JSet> cache;
  auto key = std::make_pair(lambda, static_cast<int>(emb));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, label_of(restricted(lambda, emb))).first;
  return it->second;
}

// Tree with values given by rule(k, tuple) over its own admissible domain.
JSet tree_from_rule(const Weight& mu0, const std::function<int(int, const std::vector<int>&)>& rule) {
  JSet out;
  out.mu0 = mu0;
  out.J1 = rule(1, {});
  const int n = mu0.rank();
  std::function<void(int, std::vector<int>&, int)> rec = [&](int k, std::vector<int>& t, int bound) {
    for (int i = 0; i < bound; ++i) {
      t.push_back(i);
      const int v = rule(k, t);
      out.Jk[t] = v;
      if (k < n + 1) rec(k + 1, t, v);
      t.pop_back();
    }
  };
  std::vector<int> t;
  rec(2, t, out.J1);
  return out;
}

JSet expected_jlambda(const Weight& lambda) {
  const int n = lambda.rank() - 1;
  Weight mu0 = Weight::zero(n);
  for (int k = 1; k <= n; ++k) mu0.coords[k - 1] = lambda.component(k + 1);
  return tree_from_rule(mu0, [&](int k, const std::vector<int>&) { return lambda.component(k) + 1; });
}

JSet expected_standard_phi(int n) {
  return tree_from_rule(Weight::zero(n), [](int k, const std::vector<int>&) { return k == 1 ? 2 : 1; });
}

JSet expected_standard_theta(int n) {
  return tree_from_rule(Weight::fundamental(n, n),
                        [n](int k, const std::vector<int>&) { return k == n + 1 ? 2 : 1; });
}

ojson params_n_lambda(int n, const Weight& lambda) {
  return {{"n", n}, {"lambda", weight_to_json(lambda)}};
}

ojson strings(const std::vector<std::string>& v) { return ojson(v); }

std::vector<Weight> jlambda_grid(int n_max, int lambda_max, std::vector<int>* ns) {
  std::vector<Weight> out;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& w : weight_grid(n + 1, lambda_max)) {
      out.push_back(w);
      ns->push_back(n);
    }
  return out;
}

// ---------------------------------------------------------------------------

void suite_ffl(Report& r, const GridOptions& g) {
  const int n_max = g.n_max.value_or(3), lam = g.lambda_max.value_or(2);
  for (int n = 1; n <= n_max; ++n) {
    // Paths between alpha_i and alpha_j number Catalan(j - i).
    std::uint64_t paths = 0;
    std::vector<std::uint64_t> catalan{1};
    for (int k = 1; k < n; ++k) catalan.push_back(catalan.back() * 2 * (2 * k - 1) / (k + 1));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) paths += catalan[j - i];
    r.add("dyck_path_count", {{"n", n}}, paths, enumerate_dyck_paths(n).size());
    for (const auto& lambda : weight_grid(n, lam)) {
      const auto wd = weyl_dim(lambda);
      r.add("s_lambda_count", params_n_lambda(n, lambda), wd, s_lambda(lambda).size());
      const RepModule& mod = irrep(n + 1, lambda);
      r.add("irrep_dim", params_n_lambda(n, lambda), wd, mod.dim());
      r.add("ffl_basis", params_n_lambda(n, lambda), true, verify_ffl_basis(mod, lambda));
    }
  }
}

std::vector<std::string> embedding_violations(int n, Embedding emb) {
  const AlgebraSpec alg = AlgebraSpec::semidirect(n);
  auto image = [&](const Generator& x) {
    const SignedGenerator s = emb == Embedding::Phi ? embed_phi(x, n) : embed_theta(x, n);
    return matrix_realization(s.gen, n + 2).scaled(Rational(s.sign));
  };
  std::vector<std::string> out;
  const auto gens = alg.generators();
  for (const auto& x : gens)
    for (const auto& y : gens) {
      SparseMatrix rhs(n + 2, n + 2);
      for (const auto& [z, c] : bracket(alg, x, y)) rhs = rhs + image(z).scaled(c);
      if (!(commutator(image(x), image(y)) == rhs)) out.push_back(x.to_string() + "," + y.to_string());
    }
  return out;
}

void suite_lie(Report& r, const GridOptions& g) {
  const int n_max = g.n_max.value_or(3);
  for (int n = 1; n <= n_max; ++n) {
    const AlgebraSpec sl = AlgebraSpec::sl(n + 1);
    std::vector<std::string> bad;
    for (const auto& x : sl.generators())
      for (const auto& y : sl.generators())
        if (!(commutator(matrix_realization(x, n + 1), matrix_realization(y, n + 1)) ==
              matrix_realization(bracket(sl, x, y), n + 1)))
          bad.push_back(x.to_string() + "," + y.to_string());
    r.add("sl_bracket_matches_matrices", {{"m", n + 1}}, ojson::array(), strings(bad));

    r.add("phi_preserves_brackets", {{"n", n}}, ojson::array(), strings(embedding_violations(n, Embedding::Phi)));
    r.add("theta_preserves_brackets", {{"n", n}}, ojson::array(),
          strings(embedding_violations(n, Embedding::Theta)));

    const AlgebraSpec sd = AlgebraSpec::semidirect(n);
    std::vector<std::string> jac;
    const auto gens = sd.generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        for (std::size_t c = b + 1; c < gens.size(); ++c) {
          const LieElement x = lie_element(gens[a]), y = lie_element(gens[b]), z = lie_element(gens[c]);
          LieElement s = bracket(sd, x, bracket(sd, y, z));
          s = add(s, bracket(sd, y, bracket(sd, z, x)));
          s = add(s, bracket(sd, z, bracket(sd, x, y)));
          if (!s.empty()) jac.push_back(gens[a].to_string() + gens[b].to_string() + gens[c].to_string());
        }
    r.add("semidirect_jacobi", {{"n", n}}, ojson::array(), strings(jac));
  }
}

void suite_standard(Report& r, const GridOptions& g) {
  const int n_max = g.n_max.value_or(4);
  for (int n = 1; n <= n_max; ++n) r.add("standard_action", {{"n", n}}, true, verify_standard_action(n));
}

void suite_labels(Report& r, const GridOptions& g) {
  const int n_max = g.n_max.value_or(4);
  for (int n = 1; n <= n_max; ++n) {
    const Weight w1 = Weight::fundamental(n + 1, 1);
    r.add("standard_phi_label", {{"n", n}}, jset_to_json(expected_standard_phi(n)),
          jset_to_json(cached_label(w1, Embedding::Phi)));
    r.add("standard_theta_label", {{"n", n}}, jset_to_json(expected_standard_theta(n)),
          jset_to_json(cached_label(w1, Embedding::Theta)));
  }
}

void suite_jlambda(Report& r, const GridOptions& g) {
  std::vector<int> ns;
  const auto grid = jlambda_grid(g.n_max.value_or(2), g.lambda_max.value_or(2), &ns);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const Weight& lambda = grid[idx];
    const SemidirectModule& mod = restricted(lambda, Embedding::Phi);
    r.add("jlambda", params_n_lambda(ns[idx], lambda), jset_to_json(expected_jlambda(lambda)),
          jset_to_json(cached_label(lambda, Embedding::Phi)));
    std::vector<std::string> got, want;
    for (const auto& w : decomposition_multiplicities(mod)) got.push_back(w.to_string());
    for (const auto& w : branching_multiset(lambda)) want.push_back(w.to_string());
    r.add("branching", params_n_lambda(ns[idx], lambda), strings(want), strings(got));
  }
}

void suite_phi(Report& r, const GridOptions& g) {
  std::vector<int> ns;
  const auto grid = jlambda_grid(g.n_max.value_or(2), g.lambda_max.value_or(2), &ns);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const int n = ns[idx];
    const Weight& lambda = grid[idx];
    const SemidirectModule& mod = restricted(lambda, Embedding::Phi);
    std::vector<std::string> hwv_bad, commute_bad, recon_bad;
    for (const auto& h : sl_highest_weight_vectors(mod)) {
      const std::string at = h.weight.to_string();
      for (int i = 1; i <= n + 1; ++i) {
        const HWVRecord out{phi_weight(h.weight, i), phi(mod, h, i)};
        if (!out.vector.is_zero()) {
          try {
            require_hwv(mod, out);
          } catch (const std::invalid_argument&) {
            hwv_bad.push_back(at + " i=" + std::to_string(i));
          }
        }
        if (reconstruct_P(mod, h, i) != mod.base.apply(Generator::pj(i), h.vector))
          recon_bad.push_back(at + " i=" + std::to_string(i));
        for (int j = i + 1; j <= n + 1; ++j)
          if (!check_phi_commute(mod, h, i, j))
            commute_bad.push_back(at + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
    const ojson p = params_n_lambda(n, lambda);
    r.add("phi_output_is_hwv", p, ojson::array(), strings(hwv_bad));
    r.add("phi_commute", p, ojson::array(), strings(commute_bad));
    r.add("reconstruct_P", p, ojson::array(), strings(recon_bad));
  }
}

void suite_structural(Report& r, const GridOptions& g) {
  const int s_max = g.n_max.value_or(4), lam = g.lambda_max.value_or(2);
  for (const auto& mu : weight_grid(s_max, lam))
    for (int s = 1; s <= s_max; ++s)
      r.add("q_r_structure", {{"mu", weight_to_json(mu)}, {"s", s}}, ojson::array(),
            strings(check_structural_props(mu, s).failures));

  std::vector<int> ns;
  const auto grid = jlambda_grid(std::min(g.n_max.value_or(2), 2), g.lambda_max.value_or(2), &ns);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const SemidirectModule& mod = restricted(grid[idx], Embedding::Phi);
    std::set<Weight> mus;
    for (const auto& h : sl_highest_weight_vectors(mod)) mus.insert(h.weight);
    StructuralReport rep;
    for (const auto& mu : mus)
      for (int s = 1; s <= ns[idx]; ++s) rep.merge(check_efp_identities(mod, mu, s));
    r.add("efp_identities", params_n_lambda(ns[idx], grid[idx]), ojson::array(), strings(rep.failures));
  }
}

void suite_jlaws(Report& r, const GridOptions& g) {
  std::vector<int> ns;
  const auto grid = jlambda_grid(g.n_max.value_or(2), g.lambda_max.value_or(2), &ns);
  for (std::size_t idx = 0; idx < grid.size(); ++idx)
    for (Embedding emb : {Embedding::Phi, Embedding::Theta}) {
      ojson p = params_n_lambda(ns[idx], grid[idx]);
      p["embedding"] = to_string(emb);
      const Weight lambda = emb == Embedding::Phi ? grid[idx] : xi_on_weight(grid[idx]);
      r.add("jset_laws", p, ojson::array(), strings(jset_law_violations(cached_label(lambda, emb))));
    }
}

void suite_xi(Report& r, const GridOptions& g) {
  std::vector<int> ns;
  const auto grid = jlambda_grid(g.n_max.value_or(2), g.lambda_max.value_or(2), &ns);
  for (std::size_t idx = 0; idx < grid.size(); ++idx)
    r.add("phi_theta_labels_agree", params_n_lambda(ns[idx], grid[idx]),
          jset_to_json(cached_label(grid[idx], Embedding::Phi)),
          jset_to_json(cached_label(xi_on_weight(grid[idx]), Embedding::Theta)));
}

void suite_classification(Report& r, const GridOptions& g) {
  std::vector<int> ns;
  if (g.n_max)
    for (int n = 1; n <= *g.n_max; ++n) ns.push_back(n);
  else
    ns.push_back(2);
  const int mu_max = g.lambda_max.value_or(1), value_max = g.lambda_max ? *g.lambda_max + 1 : 2;
  for (int n : ns) {
    const auto msets = enumerate_msets(n, mu_max, value_max);
    std::set<std::string> labels, targets;
    for (const auto& m : msets) {
      const Weight lambda = lambda_from_mset(m);
      const SemidirectModule& mod = restricted(lambda, Embedding::Phi);
      const QuotientSpec spec = quotient_spec(m);
      const std::size_t cut = cut_submodule(mod, spec).rank();
      const SemidirectModule q = build_quotient(mod, m);
      ojson p = {{"n", n}, {"mset", mset_to_json(m)}};
      r.add("dimension_conservation", p, mod.dim(), cut + q.dim());
      ojson got;
      try {
        const JSet j = label_of(q);
        got = jset_to_json(j);
        labels.insert(serialize_jset(j));
      } catch (const std::exception& e) {
        got = std::string("error: ") + e.what();
      }
      r.add("quotient_round_trip", p, jset_to_json(to_jset(m)), got);
      targets.insert(serialize_jset(to_jset(m)));
    }
    r.add("label_map_bijective", {{"n", n}, {"mu_max", mu_max}, {"value_max", value_max}},
          {{"msets", msets.size()}, {"distinct_labels", msets.size()}, {"onto", true}},
          {{"msets", msets.size()}, {"distinct_labels", labels.size()}, {"onto", labels == targets}});
  }
}

void suite_jordan_holder(Report& r, const GridOptions& g) {
  const int n_max = g.n_max.value_or(3);
  for (int n = 1; n <= n_max; ++n) {
    const Weight w1 = Weight::fundamental(n + 1, 1);
    for (Embedding emb : {Embedding::Phi, Embedding::Theta}) {
      std::vector<std::size_t> dims;
      for (const auto& layer : jordan_holder_profile(restricted(w1, emb))) dims.push_back(layer.dim);
      const std::vector<std::size_t> want =
          emb == Embedding::Phi ? std::vector<std::size_t>{1, std::size_t(n + 1)}
                                : std::vector<std::size_t>{std::size_t(n + 1), 1};
      r.add("jordan_holder_layers", {{"n", n}, {"embedding", to_string(emb)}}, want, dims);
    }
  }
}

}  // namespace

Report run_suite(const std::string& suite, const GridOptions& grid) {
  static const std::map<std::string, std::function<void(Report&, const GridOptions&)>> table{
      {"ffl", suite_ffl},
      {"lie", suite_lie},
      {"standard", suite_standard},
      {"labels", suite_labels},
      {"jlambda", suite_jlambda},
      {"phi", suite_phi},
      {"structural", suite_structural},
      {"jlaws", suite_jlaws},
      {"classification", suite_classification},
      {"jordan-holder", suite_jordan_holder},
      {"xi", suite_xi},
  };
  Report r;
  r.suite = suite;
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") table.at(name)(r, grid);
  } else {
    auto it = table.find(suite);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + suite);
    it->second(r, grid);
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace sdrep
