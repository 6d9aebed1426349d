#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdrep/lie.hpp"
#include "sdrep/linalg.hpp"

namespace sdrep {

struct RepModule {
  AlgebraSpec algebra;
  std::size_t ambient_dim = 0;
  std::vector<SparseVector> basis;
  // Matrices in module coordinates.
  std::map<Generator, SparseMatrix> action;
  std::vector<Weight> weight_of;
  std::optional<Weight> highest_weight;

  std::size_t dim() const { return basis.size(); }
  const SparseMatrix& act(const Generator& g) const;
  SparseVector apply(const Generator& g, const SparseVector& v) const;
};

struct HWVRecord {
  Weight weight;
  SparseVector vector;
};

RepModule build_irrep(int m, const Weight& lambda);

std::map<Weight, std::vector<std::size_t>> weight_decomposition(const RepModule& mod);

// Weight spaces ordered by their first basis index.
std::vector<HWVRecord> highest_weight_vectors(const RepModule& mod,
                                              const std::vector<Generator>& raising);

bool verify_ffl_basis(const RepModule& mod, const Weight& lambda);
bool verify_standard_action(int n);

// One message per generator pair whose commutator disagrees with the bracket.
std::vector<std::string> bracket_violations(const RepModule& mod);

// Splits v into its weight components, in basis order.
std::vector<SparseVector> weight_components(const RepModule& mod, const SparseVector& v);

}  // namespace sdrep
