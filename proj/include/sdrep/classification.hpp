#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdrep/restriction.hpp"

namespace sdrep {

struct MSet {
  Weight mu0;
  int M1 = 0;
  std::map<std::vector<int>, int> Mk;

  int rank() const { return mu0.rank(); }
  bool operator==(const MSet&) const = default;
};

JSet to_jset(const MSet& m);
MSet to_mset(const JSet& j);

std::vector<std::string> mset_violations(const MSet& m);
bool validate_mset(const MSet& m);

// Throws std::invalid_argument for an invalid M.
Weight lambda_from_mset(const MSet& m);

// Every valid MSet of rank n with mu0 coords <= mu_max and values <= value_max.
std::vector<MSet> enumerate_msets(int n, int mu_max, int value_max);

struct CutGenerator {
  // (i_1, ..., i_k); the cut vector is phi_{k+1}^exponent of the chain vector.
  std::vector<int> tuple;
  int exponent = 0;
};

struct QuotientSpec {
  Weight lambda;
  std::vector<CutGenerator> cut_generators;
};

QuotientSpec quotient_spec(const MSet& m);
// The submodule W_M inside mod.
SpanHandle cut_submodule(const SemidirectModule& mod, const QuotientSpec& spec);
// mod must come from restricting V(lambda_from_mset(M)) along Phi.
SemidirectModule build_quotient(const SemidirectModule& mod, const MSet& m);

// sl(n+1) highest weights with multiplicity, sorted.
std::vector<Weight> decomposition_multiplicities(const SemidirectModule& mod);
// Predicted branching of V(lambda) to sl(n+1) along Phi, sorted.
std::vector<Weight> branching_multiset(const Weight& lambda);

struct Layer {
  std::size_t dim = 0;
  std::vector<Weight> highest_weights;
  bool operator==(const Layer&) const = default;
};

// Composition factors from the top down: M/M1, M1/M2, ...
std::vector<Layer> jordan_holder_profile(const SemidirectModule& mod);

bool labels_equal(const JSet& a, const JSet& b);

}  // namespace sdrep
