#include "sdrep/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sdrep/ffl.hpp"
#include "sdrep/verify.hpp"

namespace sdrep::cli {

namespace {

Weight checked_weight(const std::string& text, int rank, const char* what) {
  Weight w = parse_weight(text);
  if (w.rank() != rank)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(rank) + " coordinates");
  if (!w.is_dominant()) throw std::invalid_argument("weight must be dominant");
  return w;
}

ojson weight_histogram(const RepModule& mod) {
  ojson out = ojson::object();
  for (const auto& [w, idx] : weight_decomposition(mod)) out[w.to_string()] = idx.size();
  return out;
}

std::pair<int, int> parse_seed_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--seed-grid expects n_max,lambda_max");
  const int a = std::stoi(text.substr(0, comma)), b = std::stoi(text.substr(comma + 1));
  if (a < 1 || b < 0) throw std::invalid_argument("--seed-grid out of range");
  return {a, b};
}

SemidirectModule restricted_module(int n, const std::string& lambda_text, const std::string& emb_text) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  const Weight lambda = checked_weight(lambda_text, n + 1, "--lambda");
  return restrict_module(build_irrep(n + 2, lambda), parse_embedding(emb_text));
}

JSet label_of(const SemidirectModule& mod) {
  const auto gen = find_generator(mod);
  if (!gen) throw std::runtime_error("module has no cyclic highest weight generator");
  return compute_jset(mod, *gen);
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modules over sl(n+1) semidirect C^{n+1}", "sdrep"};
  app.require_subcommand(1);

  int m = 0, n = 0;
  std::string lambda, embedding = "phi", mset_path, suite = "all", seed_grid;
  bool json = false;

  auto* irrep_cmd = app.add_subcommand("irrep", "Build an irreducible sl(m)-module");
  irrep_cmd->add_option("--m", m, "sl(m)")->required();
  irrep_cmd->add_option("--lambda", lambda, "Highest weight, comma separated")->required();
  irrep_cmd->add_flag("--json", json);

  auto* ffl_cmd = app.add_subcommand("verify-ffl", "Compare the FFL basis with the Weyl dimension");
  ffl_cmd->add_option("--n", n, "Rank")->required();
  ffl_cmd->add_option("--lambda", lambda)->required();
  ffl_cmd->add_flag("--json", json);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict V(lambda) along an embedding");
  auto* label_cmd = app.add_subcommand("label", "Print the label of V(lambda) restricted along an embedding");
  for (auto* c : {restrict_cmd, label_cmd}) {
    c->add_option("--n", n)->required();
    c->add_option("--lambda", lambda)->required();
    c->add_option("--embedding", embedding)->check(CLI::IsMember({"phi", "theta"}));
    c->add_flag("--json", json);
  }

  auto* quotient_cmd = app.add_subcommand("quotient", "Realize an admissible set as a quotient module");
  quotient_cmd->add_option("--n", n)->required();
  quotient_cmd->add_option("--mset", mset_path, "JSON file")->required();
  quotient_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed-grid", seed_grid, "n_max,lambda_max");
  verify_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (irrep_cmd->parsed()) {
      if (m < 2) throw std::invalid_argument("--m must be at least 2");
      const Weight w = checked_weight(lambda, m - 1, "--lambda");
      const RepModule mod = build_irrep(m, w);
      const bool ffl_ok = verify_ffl_basis(mod, w);
      ojson j = {{"m", m}, {"lambda", weight_to_json(w)}, {"dim", mod.dim()},
                 {"weights", weight_histogram(mod)}, {"ffl_verified", ffl_ok}};
      if (json)
        out << j.dump() << "\n";
      else
        out << "V" << w.to_string() << " of sl(" << m << "): dim " << mod.dim()
            << (ffl_ok ? ", FFL basis verified" : ", FFL basis FAILED") << "\n";
      return ffl_ok ? 0 : 1;
    }

    if (ffl_cmd->parsed()) {
      if (n < 1) throw std::invalid_argument("--n must be positive");
      const Weight w = checked_weight(lambda, n, "--lambda");
      const auto paths = enumerate_dyck_paths(n);
      const auto exps = s_lambda(w);
      const std::uint64_t wd = weyl_dim(w);
      const bool match = exps.size() == wd && verify_ffl_basis(build_irrep(n + 1, w), w);
      ojson j = {{"n", n},
                 {"lambda", weight_to_json(w)},
                 {"n_paths", paths.size()},
                 {"n_multiexponents", exps.size()},
                 {"weyl_dim", wd},
                 {"match", match}};
      out << j.dump() << "\n";
      return match ? 0 : 1;
    }

    if (restrict_cmd->parsed() || label_cmd->parsed()) {
      const SemidirectModule mod = restricted_module(n, lambda, embedding);
      const JSet label = label_of(mod);
      if (label_cmd->parsed() || json) {
        out << serialize_jset(label) << "\n";
        return 0;
      }
      out << "V" << mod.provenance->lambda.to_string() << " restricted along " << embedding << ": dim "
          << mod.dim() << "\n";
      out << "sl(" << n + 1 << ") highest weights:";
      for (const auto& w : decomposition_multiplicities(mod)) out << " " << w.to_string();
      out << "\nlabel: " << serialize_jset(label) << "\n";
      return 0;
    }

    if (quotient_cmd->parsed()) {
      std::ifstream in(mset_path);
      if (!in) throw std::invalid_argument("cannot read " + mset_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const MSet ms = parse_mset(buf.str());
      if (ms.mu0.rank() != n) throw std::invalid_argument("mu0 must have n coordinates");
      const Weight w = lambda_from_mset(ms);
      const SemidirectModule full = restrict_module(build_irrep(n + 2, w), Embedding::Phi);
      const SemidirectModule q = build_quotient(full, ms);
      const JSet label = label_of(q);
      const bool match = label == to_jset(ms);
      ojson j = {{"n", n},
                 {"lambda", weight_to_json(w)},
                 {"ambient_dim", full.dim()},
                 {"dim", q.dim()},
                 {"label", jset_to_json(label)},
                 {"label_matches", match}};
      if (json)
        out << j.dump() << "\n";
      else
        out << "quotient of V" << w.to_string() << " (dim " << full.dim() << "): dim " << q.dim()
            << ", label " << (match ? "matches" : "DIFFERS") << "\n";
      return match ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      GridOptions grid;
      if (!seed_grid.empty()) {
        const auto [a, b] = parse_seed_grid(seed_grid);
        grid.n_max = a;
        grid.lambda_max = b;
      }
      const Report r = run_suite(suite, grid);
      if (json) {
        out << r.to_json().dump(2) << "\n";
      } else {
        for (const auto& c : r.checks)
          if (!c.pass)
            err << "FAIL " << c.name << " " << c.params.dump() << " expected " << c.expected.dump() << " got "
                << c.got.dump() << "\n";
        out << r.suite << ": " << r.passed() << "/" << r.checks.size() << " passed in " << r.wall_time_s
            << " s\n";
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sdrep::cli
