#pragma once

#include <vector>

#include "sdrep/irrep.hpp"

namespace sdrep {

// Smallest subspace containing the seeds and stable under the given generators.
SpanHandle generated_submodule(const RepModule& mod, const std::vector<SparseVector>& seeds,
                               const std::vector<Generator>& gens);
SpanHandle generated_submodule(const RepModule& mod, const std::vector<SparseVector>& seeds);

// Basis vectors of the quotient are the parent unit vectors at sub.free_columns().
RepModule quotient_module(const RepModule& mod, const SpanHandle& sub);
// Basis vectors are sub.basis() written in parent coordinates.
RepModule submodule_module(const RepModule& mod, const SpanHandle& sub);

bool is_stable(const RepModule& mod, const SpanHandle& sub, const std::vector<Generator>& gens);

}  // namespace sdrep
