#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdrep/irrep.hpp"
#include "sdrep/uea.hpp"

namespace sdrep {

enum class Embedding { Phi, Theta };

std::string to_string(Embedding e);
Embedding parse_embedding(const std::string& text);

struct Provenance {
  Weight lambda;
  Embedding embedding = Embedding::Phi;
};

struct SemidirectModule {
  RepModule base;
  std::optional<Provenance> provenance;
  // A known cyclic generator, in module coordinates.
  std::optional<SparseVector> generator;

  int rank() const { return base.algebra.rank; }
  std::size_t dim() const { return base.dim(); }
};

// V must be an sl(n+2)-module with n >= 1.
SemidirectModule restrict_module(const RepModule& v, Embedding emb);
// sl(n+1)-module with every P acting as zero.
SemidirectModule with_zero_radical(const RepModule& sl_module);
SemidirectModule direct_sum(const SemidirectModule& a, const SemidirectModule& b);

// Violated module axioms: brackets, commuting and nilpotent P, P weight shifts.
std::vector<std::string> semidirect_violations(const SemidirectModule& mod);

std::vector<HWVRecord> sl_highest_weight_vectors(const SemidirectModule& mod);

// Throws std::invalid_argument unless v is a weight-mu vector killed by every E.
void require_hwv(const SemidirectModule& mod, const HWVRecord& v);

// phi_i on a highest weight vector; zero maps to zero.
SparseVector phi(const SemidirectModule& mod, const HWVRecord& v, int i);
// Output weight mu + omega_i - omega_{i-1}.
Weight phi_weight(const Weight& mu, int i);
HWVRecord phi_record(const SemidirectModule& mod, const HWVRecord& v, int i);
SparseVector phi_hat(const SemidirectModule& mod, const HWVRecord& v, int i);
SparseVector reconstruct_P(const SemidirectModule& mod, const HWVRecord& v, int i);
bool check_phi_commute(const SemidirectModule& mod, const HWVRecord& v, int i, int j);

bool check_cyclic(const SemidirectModule& mod, const SparseVector& v);
// mod.generator when set and a highest weight vector, else the first cyclic HWV.
std::optional<HWVRecord> find_generator(const SemidirectModule& mod);

struct JSet {
  Weight mu0;
  int J1 = 0;
  // Keyed by (i_1, ..., i_{k-1}); the level k is the key length + 1.
  std::map<std::vector<int>, int> Jk;

  int rank() const { return mu0.rank(); }
  // Empty prefix gives J1.
  std::optional<int> value(const std::vector<int>& prefix) const;
  bool operator==(const JSet&) const = default;
};

JSet compute_jset(const SemidirectModule& mod, const HWVRecord& gen);
// Empty when the laws hold.
std::vector<std::string> jset_law_violations(const JSet& j);

// phi_k^{i_k} ... phi_1^{i_1}(gen) for the tuple (i_1, ..., i_k).
HWVRecord chain_vector(const SemidirectModule& mod, const HWVRecord& gen, const std::vector<int>& tuple);

struct StructuralReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what);
  void merge(const StructuralReport& o);
};

// Symbolic checks on Q and R for a fixed mu and s.
StructuralReport check_structural_props(const Weight& mu, int s);
// Commutator identities of E_j with decorated operators, as matrices on mod.
StructuralReport check_efp_identities(const SemidirectModule& mod, const Weight& mu, int s);

}  // namespace sdrep
