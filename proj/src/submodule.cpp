#include "sdrep/submodule.hpp"

#include <deque>
#include <stdexcept>

namespace sdrep {

SpanHandle generated_submodule(const RepModule& mod, const std::vector<SparseVector>& seeds,
                               const std::vector<Generator>& gens) {
  SpanHandle span(mod.dim());
  std::deque<SparseVector> queue;
  auto push = [&](const SparseVector& v) {
    for (const auto& part : weight_components(mod, v)) {
      SparseVector r = span.reduce(part);
      if (r.is_zero()) continue;
      span.insert(r);
      queue.push_back(std::move(r));
    }
  };
  for (const auto& s : seeds) {
    if (s.dim() != mod.dim()) throw std::invalid_argument("seed dimension mismatch");
    push(s);
  }
  while (!queue.empty() && span.rank() < mod.dim()) {
    SparseVector x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      SparseVector y = mod.apply(g, x);
      if (!y.is_zero()) push(y);
    }
  }
  return span;
}

SpanHandle generated_submodule(const RepModule& mod, const std::vector<SparseVector>& seeds) {
  return generated_submodule(mod, seeds, mod.algebra.generators());
}

RepModule quotient_module(const RepModule& mod, const SpanHandle& sub) {
  if (sub.dim() != mod.dim()) throw std::invalid_argument("subspace dimension mismatch");
  const auto free = sub.free_columns();
  const std::size_t d = free.size();
  RepModule out;
  out.algebra = mod.algebra;
  out.ambient_dim = mod.dim();
  for (std::size_t c : free) {
    out.basis.push_back(SparseVector::unit(mod.dim(), c));
    out.weight_of.push_back(mod.weight_of[c]);
  }
  for (const auto& [g, m] : mod.action) {
    std::vector<SparseVector> cols;
    cols.reserve(d);
    for (std::size_t c : free) cols.push_back(sub.project_to_quotient(m.column(c)));
    out.action.emplace(g, SparseMatrix::from_columns(d, cols));
  }
  return out;
}

RepModule submodule_module(const RepModule& mod, const SpanHandle& sub) {
  if (sub.dim() != mod.dim()) throw std::invalid_argument("subspace dimension mismatch");
  RepModule out;
  out.algebra = mod.algebra;
  out.ambient_dim = mod.dim();
  out.basis = sub.basis();
  for (std::size_t p : sub.pivots()) out.weight_of.push_back(mod.weight_of[p]);
  for (const auto& [g, m] : mod.action) {
    std::vector<SparseVector> cols;
    for (const auto& b : sub.basis()) cols.push_back(sub.coordinates(m.apply(b)));
    out.action.emplace(g, SparseMatrix::from_columns(sub.rank(), cols));
  }
  return out;
}

bool is_stable(const RepModule& mod, const SpanHandle& sub, const std::vector<Generator>& gens) {
  for (const auto& g : gens)
    for (const auto& b : sub.basis())
      if (!sub.contains(mod.apply(g, b))) return false;
  return true;
}

}  // namespace sdrep
