#include "sdrep/restriction.hpp"

#include <set>
#include <stdexcept>

#include "sdrep/submodule.hpp"

namespace sdrep {

std::string to_string(Embedding e) { return e == Embedding::Phi ? "phi" : "theta"; }

Embedding parse_embedding(const std::string& text) {
  if (text == "phi" || text == "Phi") return Embedding::Phi;
  if (text == "theta" || text == "Theta") return Embedding::Theta;
  throw std::invalid_argument("unknown embedding: " + text);
}

namespace {

std::optional<std::size_t> unique_index_of_weight(const RepModule& v, const Weight& w) {
  std::optional<std::size_t> found;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    if (v.weight_of[c] != w) continue;
    if (found) return std::nullopt;
    found = c;
  }
  return found;
}

SparseVector phi_unchecked(const SemidirectModule& mod, const HWVRecord& v, int i) {
  if (v.vector.is_zero()) return SparseVector(mod.dim());
  return phi_expression(v.weight, i).apply(mod.base, v.vector);
}

}  // namespace

SemidirectModule restrict_module(const RepModule& v, Embedding emb) {
  if (v.algebra.kind != AlgebraSpec::Kind::SL || v.algebra.rank < 2)
    throw std::invalid_argument("restriction needs an sl(n+2)-module with n >= 1");
  const int n = v.algebra.rank - 1;
  const AlgebraSpec alg = AlgebraSpec::semidirect(n);

  SemidirectModule out;
  out.base.algebra = alg;
  out.base.ambient_dim = v.ambient_dim;
  out.base.basis = v.basis;
  for (const auto& g : alg.generators()) {
    const SignedGenerator image = emb == Embedding::Phi ? embed_phi(g, n) : embed_theta(g, n);
    const SparseMatrix& m = v.act(image.gen);
    out.base.action.emplace(g, image.sign == 1 ? m : m.scaled(Rational(-1)));
  }
  for (std::size_t c = 0; c < v.dim(); ++c) {
    Weight w = Weight::zero(n);
    for (int i = 1; i <= n; ++i) {
      const Rational x = out.base.act(Generator::h(i)).at(c, c);
      if (x.get_den() != 1) throw std::logic_error("non-integral weight after restriction");
      w.coords[i - 1] = static_cast<int>(x.get_num().get_si());
    }
    out.base.weight_of.push_back(w);
  }
  weight_decomposition(out.base);

  if (v.highest_weight) {
    out.provenance = Provenance{*v.highest_weight, emb};
    const Weight target =
        emb == Embedding::Phi ? *v.highest_weight : xi_on_weight(*v.highest_weight) * -1;
    if (auto idx = unique_index_of_weight(v, target)) out.generator = SparseVector::unit(v.dim(), *idx);
  }
  return out;
}

SemidirectModule with_zero_radical(const RepModule& sl_module) {
  if (sl_module.algebra.kind != AlgebraSpec::Kind::SL)
    throw std::invalid_argument("expected an sl(n+1)-module");
  SemidirectModule out;
  out.base = sl_module;
  out.base.algebra = AlgebraSpec::semidirect(sl_module.algebra.rank);
  out.base.highest_weight.reset();
  for (const auto& g : out.base.algebra.radical())
    out.base.action.emplace(g, SparseMatrix(sl_module.dim(), sl_module.dim()));
  return out;
}

SemidirectModule direct_sum(const SemidirectModule& a, const SemidirectModule& b) {
  if (!(a.base.algebra == b.base.algebra)) throw std::invalid_argument("direct sum of different algebras");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  SemidirectModule out;
  out.base.algebra = a.base.algebra;
  out.base.ambient_dim = d;
  for (std::size_t c = 0; c < d; ++c) out.base.basis.push_back(SparseVector::unit(d, c));
  out.base.weight_of = a.base.weight_of;
  out.base.weight_of.insert(out.base.weight_of.end(), b.base.weight_of.begin(), b.base.weight_of.end());
  for (const auto& g : out.base.algebra.generators()) {
    std::vector<SparseMatrix::Triplet> t;
    for (std::size_t c = 0; c < da; ++c)
      for (const auto& [r, x] : a.base.act(g).column(c).entries()) t.push_back({r, c, x});
    for (std::size_t c = 0; c < db; ++c)
      for (const auto& [r, x] : b.base.act(g).column(c).entries()) t.push_back({r + da, c + da, x});
    out.base.action.emplace(g, SparseMatrix::from_triplets(d, d, std::move(t)));
  }
  return out;
}

std::vector<std::string> semidirect_violations(const SemidirectModule& mod) {
  std::vector<std::string> out = bracket_violations(mod.base);
  const auto& alg = mod.base.algebra;
  const auto radical = alg.radical();
  for (std::size_t a = 0; a < radical.size(); ++a)
    for (std::size_t b = a + 1; b < radical.size(); ++b)
      if (!commutator(mod.base.act(radical[a]), mod.base.act(radical[b])).is_zero())
        out.push_back("P matrices do not commute: " + radical[a].to_string() + "," + radical[b].to_string());

  std::set<Weight> weights(mod.base.weight_of.begin(), mod.base.weight_of.end());
  for (const auto& p : radical) {
    const Weight shift = generator_weight(alg, p);
    bool shifts = true, nilpotent = true;
    for (std::size_t c = 0; c < mod.dim(); ++c) {
      for (const auto& [r, x] : mod.base.act(p).column(c).entries())
        if (mod.base.weight_of[r] != mod.base.weight_of[c] + shift) shifts = false;
      SparseVector w = SparseVector::unit(mod.dim(), c);
      for (std::size_t k = 0; k <= weights.size() && !w.is_zero(); ++k) w = mod.base.apply(p, w);
      if (!w.is_zero()) nilpotent = false;
    }
    if (!shifts) out.push_back(p.to_string() + " does not shift weights by its own weight");
    if (!nilpotent) out.push_back(p.to_string() + " is not nilpotent");
  }
  return out;
}

std::vector<HWVRecord> sl_highest_weight_vectors(const SemidirectModule& mod) {
  return highest_weight_vectors(mod.base, mod.base.algebra.raising());
}

void require_hwv(const SemidirectModule& mod, const HWVRecord& v) {
  if (v.vector.dim() != mod.dim()) throw std::invalid_argument("vector dimension mismatch");
  if (v.weight.rank() != mod.rank()) throw std::invalid_argument("weight rank mismatch");
  for (const auto& e : mod.base.algebra.raising())
    if (!mod.base.apply(e, v.vector).is_zero())
      throw std::invalid_argument("vector is not annihilated by " + e.to_string());
  for (const auto& h : mod.base.algebra.cartan())
    if (mod.base.apply(h, v.vector) != Rational(v.weight.component(h.p)) * v.vector)
      throw std::invalid_argument("vector does not have the recorded weight");
}

Weight phi_weight(const Weight& mu, int i) {
  return mu + Weight::fundamental(mu.rank(), i) - Weight::fundamental(mu.rank(), i - 1);
}

SparseVector phi(const SemidirectModule& mod, const HWVRecord& v, int i) {
  require_hwv(mod, v);
  return phi_unchecked(mod, v, i);
}

HWVRecord phi_record(const SemidirectModule& mod, const HWVRecord& v, int i) {
  return {phi_weight(v.weight, i), phi(mod, v, i)};
}

SparseVector phi_hat(const SemidirectModule& mod, const HWVRecord& v, int i) {
  return phi_hat_scale(v.weight, i) * phi(mod, v, i);
}

SparseVector reconstruct_P(const SemidirectModule& mod, const HWVRecord& v, int i) {
  auto sign = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
  SparseVector out = sign(i + 1) * phi_hat(mod, v, i);
  for (int k = 1; k <= i - 1; ++k)
    out.axpy(sign(k + 1), q_hat(v.weight, i - 1, k, k).apply(mod.base, phi_hat(mod, v, k)));
  return out;
}

bool check_phi_commute(const SemidirectModule& mod, const HWVRecord& v, int i, int j) {
  require_hwv(mod, v);
  const HWVRecord vi{phi_weight(v.weight, i), phi_unchecked(mod, v, i)};
  const HWVRecord vj{phi_weight(v.weight, j), phi_unchecked(mod, v, j)};
  return phi_unchecked(mod, vj, i) == phi_unchecked(mod, vi, j);
}

bool check_cyclic(const SemidirectModule& mod, const SparseVector& v) {
  if (v.is_zero()) return false;
  return generated_submodule(mod.base, {v}).rank() == mod.dim();
}

std::optional<HWVRecord> find_generator(const SemidirectModule& mod) {
  const auto hwvs = sl_highest_weight_vectors(mod);
  if (mod.generator) {
    for (const auto& h : hwvs) {
      if (h.vector == *mod.generator && check_cyclic(mod, h.vector)) return h;
    }
    const auto parts = weight_components(mod.base, *mod.generator);
    if (parts.size() == 1) {
      HWVRecord rec{mod.base.weight_of[mod.generator->leading_index()], *mod.generator};
      try {
        require_hwv(mod, rec);
        if (check_cyclic(mod, rec.vector)) return rec;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  std::vector<SparseVector> images;
  for (const auto& p : mod.base.algebra.radical())
    for (std::size_t c = 0; c < mod.dim(); ++c) {
      SparseVector y = mod.base.act(p).column(c);
      if (!y.is_zero()) images.push_back(std::move(y));
    }
  const SpanHandle radical_image(mod.dim(), images);
  for (const auto& h : hwvs) {
    if (radical_image.contains(h.vector)) continue;
    if (check_cyclic(mod, h.vector)) return h;
  }
  return std::nullopt;
}

}  // namespace sdrep
