#include "sdrep/irrep.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sdrep/ffl.hpp"

namespace sdrep {

const SparseMatrix& RepModule::act(const Generator& g) const {
  auto it = action.find(g);
  if (it == action.end()) throw std::invalid_argument("no action for " + g.to_string());
  return it->second;
}

SparseVector RepModule::apply(const Generator& g, const SparseVector& v) const {
  return act(g).apply(v);
}

namespace {

using Entry = SparseVector::Entry;

struct UnitTerm {
  int i, j, c;
};

std::vector<UnitTerm> matrix_units(const Generator& g) {
  switch (g.kind) {
    case GenKind::H:
      return {{g.p, g.p, 1}, {g.p + 1, g.p + 1, -1}};
    case GenKind::E:
      return {{g.p, g.q + 1, 1}};
    case GenKind::F:
      return {{g.q + 1, g.p, 1}};
    case GenKind::P:
      break;
  }
  throw std::invalid_argument("not an sl generator");
}

// k-subsets of {1..m} as bitmasks (bit i-1 for i), lexicographic order.
std::vector<unsigned> subsets(int m, int k) {
  std::vector<unsigned> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    unsigned mask = 0;
    for (int x : c) mask |= 1u << x;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Action of sl(m) on the factors of an ambient tensor product.
class Ambient {
 public:
  Ambient(int m, const Weight& lambda, const std::vector<Generator>& gens) : m_(m) {
    for (int k = 1; k < m; ++k)
      for (int r = 0; r < lambda.component(k); ++r) factor_k_.push_back(k);
    dim_ = 1;
    for (int k : factor_k_) {
      stride_.push_back(dim_);
      dim_ *= binom(m, k);
    }
    for (int k = 1; k < m; ++k) tables_[k] = build_tables(k, gens);
    for (std::size_t g = 0; g < gens.size(); ++g) gen_index_[gens[g]] = g;
  }

  std::size_t dim() const { return dim_; }

  SparseVector apply(const Generator& g, const SparseVector& x) const {
    const std::size_t gi = gen_index_.at(g);
    std::vector<Entry> acc;
    for (const auto& [idx, val] : x.entries()) {
      for (std::size_t f = 0; f < factor_k_.size(); ++f) {
        const auto& table = tables_.at(factor_k_[f])[gi];
        const std::size_t size = table.size();
        const std::size_t s = (idx / stride_[f]) % size;
        for (const auto& [s2, c] : table[s]) {
          std::size_t j = idx - s * stride_[f] + static_cast<std::size_t>(s2) * stride_[f];
          acc.emplace_back(j, val * c);
        }
      }
    }
    return SparseVector::from_entries(dim_, std::move(acc));
  }

 private:
  using Table = std::vector<std::vector<std::pair<int, int>>>;

  static std::size_t binom(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
  }

  std::vector<Table> build_tables(int k, const std::vector<Generator>& gens) const {
    const auto subs = subsets(m_, k);
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i]] = static_cast<int>(i);
    std::vector<Table> out;
    for (const auto& g : gens) {
      Table t(subs.size());
      for (std::size_t s = 0; s < subs.size(); ++s) {
        std::map<int, int> row;
        const unsigned mask = subs[s];
        for (const auto& u : matrix_units(g)) {
          const unsigned bi = 1u << (u.i - 1), bj = 1u << (u.j - 1);
          if (!(mask & bj)) continue;
          if (u.i == u.j) {
            row[static_cast<int>(s)] += u.c;
            continue;
          }
          if (mask & bi) continue;
          const int lo = std::min(u.i, u.j), hi = std::max(u.i, u.j);
          unsigned between = 0;
          for (int b = lo + 1; b < hi; ++b) between |= 1u << (b - 1);
          const int sign = (std::popcount(mask & between) % 2) ? -1 : 1;
          row[index.at((mask & ~bj) | bi)] += sign * u.c;
        }
        for (const auto& [s2, c] : row)
          if (c != 0) t[s].emplace_back(s2, c);
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  int m_;
  std::vector<int> factor_k_;
  std::vector<std::size_t> stride_;
  std::size_t dim_ = 1;
  std::map<int, std::vector<Table>> tables_;
  std::map<Generator, std::size_t> gen_index_;
};

}  // namespace

RepModule build_irrep(int m, const Weight& lambda) {
  const AlgebraSpec alg = AlgebraSpec::sl(m);
  if (lambda.rank() != alg.rank) throw std::invalid_argument("weight rank does not match sl(m)");
  if (!lambda.is_dominant()) throw std::invalid_argument("build_irrep needs a dominant weight");
  if (m > 31) throw std::invalid_argument("matrix size too large");

  const auto gens = alg.generators();
  Ambient amb(m, lambda, gens);

  struct Space {
    int depth;
    SpanHandle span;
  };
  std::map<Weight, Space> spaces;
  spaces.emplace(lambda, Space{0, SpanHandle(amb.dim(), {SparseVector::unit(amb.dim(), 0)})});

  std::vector<Weight> frontier{lambda};
  for (int depth = 0; !frontier.empty(); ++depth) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      const std::vector<SparseVector> rows = spaces.at(w).span.basis();
      for (int i = 1; i <= alg.rank; ++i) {
        const Generator f = Generator::f(i, i);
        const Weight target = w + generator_weight(alg, f);
        for (const auto& b : rows) {
          SparseVector y = amb.apply(f, b);
          if (y.is_zero()) continue;
          auto it = spaces.find(target);
          if (it == spaces.end()) {
            it = spaces.emplace(target, Space{depth + 1, SpanHandle(amb.dim())}).first;
            next.push_back(target);
          }
          it->second.span.insert(y);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Weight> order;
  for (const auto& [w, sp] : spaces) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    const int da = spaces.at(a).depth, db = spaces.at(b).depth;
    if (da != db) return da < db;
    return a > b;
  });

  RepModule mod;
  mod.algebra = alg;
  mod.ambient_dim = amb.dim();
  mod.highest_weight = lambda;
  std::map<Weight, std::size_t> start;
  for (const auto& w : order) {
    start[w] = mod.basis.size();
    for (const auto& row : spaces.at(w).span.basis()) {
      mod.basis.push_back(row);
      mod.weight_of.push_back(w);
    }
  }
  const std::size_t dim = mod.basis.size();

  for (const auto& g : gens) {
    std::vector<SparseMatrix::Triplet> t;
    if (g.kind == GenKind::H) {
      for (std::size_t c = 0; c < dim; ++c) {
        const int x = mod.weight_of[c].component(g.p);
        if (x != 0) t.push_back({c, c, Rational(x)});
      }
    } else {
      const Weight shift = generator_weight(alg, g);
      for (std::size_t c = 0; c < dim; ++c) {
        SparseVector y = amb.apply(g, mod.basis[c]);
        if (y.is_zero()) continue;
        const Weight target = mod.weight_of[c] + shift;
        auto it = spaces.find(target);
        if (it == spaces.end()) throw std::logic_error("image left the module");
        const SpanHandle& span = it->second.span;
        const SparseVector coords = span.coordinates(y);
        for (const auto& [r, x] : coords.entries()) t.push_back({start.at(target) + r, c, x});
      }
    }
    mod.action.emplace(g, SparseMatrix::from_triplets(dim, dim, std::move(t)));
  }
  return mod;
}

std::map<Weight, std::vector<std::size_t>> weight_decomposition(const RepModule& mod) {
  std::map<Weight, std::vector<std::size_t>> out;
  for (const auto& h : mod.algebra.cartan()) {
    const SparseMatrix& m = mod.act(h);
    for (std::size_t c = 0; c < mod.dim(); ++c) {
      const SparseVector& col = m.column(c);
      const Rational expected(mod.weight_of[c].component(h.p));
      const bool ok = (col.is_zero() && sgn(expected) == 0) ||
                      (col.nnz() == 1 && col.entries()[0].first == c && col.entries()[0].second == expected);
      if (!ok) throw std::logic_error("basis vector is not a Cartan eigenvector with its weight");
    }
  }
  for (std::size_t c = 0; c < mod.dim(); ++c) out[mod.weight_of[c]].push_back(c);
  return out;
}

std::vector<HWVRecord> highest_weight_vectors(const RepModule& mod,
                                              const std::vector<Generator>& raising) {
  auto decomp = weight_decomposition(mod);
  std::vector<std::pair<std::size_t, Weight>> order;
  for (const auto& [w, idx] : decomp) order.emplace_back(idx.front(), w);
  std::sort(order.begin(), order.end());

  std::vector<HWVRecord> out;
  for (const auto& [first, w] : order) {
    const auto& idx = decomp.at(w);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Entry>> rows;
    for (std::size_t gi = 0; gi < raising.size(); ++gi) {
      const SparseMatrix& m = mod.act(raising[gi]);
      for (std::size_t local = 0; local < idx.size(); ++local)
        for (const auto& [r, x] : m.column(idx[local]).entries()) rows[{gi, r}].emplace_back(local, x);
    }
    std::vector<SparseVector> stacked;
    for (auto& [key, e] : rows) stacked.push_back(SparseVector::from_entries(idx.size(), std::move(e)));
    const auto kernel = kernel_basis(SparseMatrix::from_rows(idx.size(), stacked));
    for (const auto& k : kernel) {
      std::vector<Entry> e;
      for (const auto& [local, x] : k.entries()) e.emplace_back(idx[local], x);
      out.push_back({w, SparseVector::from_entries(mod.dim(), std::move(e))});
    }
  }
  return out;
}

bool verify_ffl_basis(const RepModule& mod, const Weight& lambda) {
  if (mod.algebra.kind != AlgebraSpec::Kind::SL || lambda.rank() != mod.algebra.rank) return false;
  std::optional<std::size_t> top;
  for (std::size_t c = 0; c < mod.dim(); ++c) {
    if (mod.weight_of[c] == lambda) {
      if (top) return false;
      top = c;
    }
  }
  if (!top) return false;
  const SparseVector v = SparseVector::unit(mod.dim(), *top);
  const auto roots = pbw_order(lambda.rank());
  const auto exps = s_lambda(lambda);
  if (exps.size() != mod.dim()) return false;
  SpanHandle span(mod.dim());
  for (const auto& s : exps) {
    SparseVector w = v;
    for (const auto& a : roots)
      for (int k = 0; k < s.at(a); ++k) w = mod.apply(Generator::f(a.p, a.q), w);
    if (!span.insert(w)) return false;
  }
  return span.rank() == mod.dim();
}

bool verify_standard_action(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const RepModule mod = build_irrep(n + 1, Weight::fundamental(n, 1));
  if (mod.dim() != static_cast<std::size_t>(n + 1)) return false;
  const std::size_t d = mod.dim();
  const SparseVector zero(d);
  // u[0] = v, u[i] = F_{1,i} v.
  std::vector<SparseVector> u{SparseVector::unit(d, 0)};
  for (int i = 1; i <= n; ++i) u.push_back(mod.apply(Generator::f(1, i), u[0]));
  auto d_ = [](int a, int b) { return a == b ? 1 : 0; };
  auto scaled = [](int c, const SparseVector& x) { return Rational(c) * x; };

  for (int j = 1; j <= n; ++j) {
    if (mod.apply(Generator::h(j), u[0]) != scaled(d_(j, 1), u[0])) return false;
    for (int i = 1; i <= n; ++i) {
      if (u[i].is_zero()) return false;
      if (mod.apply(Generator::h(j), u[i]) != scaled(d_(j, i + 1) - d_(j, i), u[i])) return false;
    }
    for (int h = 0; h < j; ++h) {
      const Generator e = Generator::e(j - h, j), f = Generator::f(j - h, j);
      if (!mod.apply(e, u[0]).is_zero()) return false;
      if (mod.apply(f, u[0]) != scaled(d_(1, j - h), u[j])) return false;
      for (int i = 1; i <= n; ++i) {
        if (mod.apply(e, u[i]) != scaled(d_(j, i), u[j - h - 1])) return false;
        if (mod.apply(f, u[i]) != scaled(d_(j - 1, i + h), u[j])) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> bracket_violations(const RepModule& mod) {
  std::vector<std::string> out;
  const auto gens = mod.algebra.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const SparseMatrix lhs = commutator(mod.act(gens[a]), mod.act(gens[b]));
      SparseMatrix rhs(mod.dim(), mod.dim());
      for (const auto& [g, c] : bracket(mod.algebra, gens[a], gens[b])) rhs = rhs + mod.act(g).scaled(c);
      if (!(lhs == rhs)) out.push_back("[" + gens[a].to_string() + "," + gens[b].to_string() + "]");
    }
  }
  return out;
}

std::vector<SparseVector> weight_components(const RepModule& mod, const SparseVector& v) {
  std::map<Weight, std::vector<Entry>> parts;
  std::vector<Weight> order;
  for (const auto& [i, x] : v.entries()) {
    const Weight& w = mod.weight_of.at(i);
    if (!parts.count(w)) order.push_back(w);
    parts[w].emplace_back(i, x);
  }
  std::vector<SparseVector> out;
  for (const auto& w : order) out.push_back(SparseVector::from_entries(mod.dim(), std::move(parts[w])));
  return out;
}

}  // namespace sdrep
