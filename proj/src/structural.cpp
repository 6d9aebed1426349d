#include <functional>
#include <set>

#include "sdrep/restriction.hpp"

namespace sdrep {

void StructuralReport::expect(bool cond, const std::string& what) {
  ++checks;
  if (!cond) failures.push_back(what);
}

void StructuralReport::merge(const StructuralReport& o) {
  checks += o.checks;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

namespace {

// Shape checks shared by Q_k (window [lo, hi], anchor on hi) and R_{i,h}.
void check_shape(StructuralReport& rep, const std::string& name, const UEAExpression& x, int lo, int hi) {
  rep.expect(x.size() == (std::size_t{1} << (hi - lo)), name + ": monomial count");
  std::set<std::pair<int, int>> seen;
  for (const auto& m : x.monomials()) {
    const std::string tag = name + " monomial";
    std::set<Generator> distinct(m.factors.begin(), m.factors.end());
    rep.expect(distinct.size() == m.factors.size(), tag + ": repeated factor");
    bool window = true, anchored = false, disjoint = true, ordered = true;
    for (std::size_t a = 0; a < m.factors.size(); ++a) {
      const Generator& f = m.factors[a];
      if (f.kind != GenKind::F || f.p < lo || f.q > hi) window = false;
      if (f.q == hi) anchored = true;
      seen.insert({f.p, f.q});
      for (std::size_t b = a + 1; b < m.factors.size(); ++b) {
        const Generator& g = m.factors[b];
        if (!(f.q < g.p || g.q < f.p)) disjoint = false;
        if (!(g.q < f.p)) ordered = false;
      }
    }
    rep.expect(window, tag + ": factor outside window");
    rep.expect(anchored, tag + ": no factor ending at the window top");
    rep.expect(disjoint, tag + ": overlapping factor windows");
    rep.expect(ordered, tag + ": factor windows out of order");
  }
  for (int p = lo; p <= hi; ++p)
    for (int q = p; q <= hi; ++q)
      rep.expect(seen.count({p, q}) == 1, name + ": F[" + std::to_string(p) + "," + std::to_string(q) +
                                              "] divides no monomial");
}

// Sum over compositions of [lo, hi] into consecutive blocks, top block leftmost.
UEAExpression composition_form(const Weight& mu, int s, int lo, int hi) {
  UEAExpression out;
  std::function<void(int, UEAExpression)> rec = [&](int top, UEAExpression acc) {
    if (top < lo) {
      out = out + acc;
      return;
    }
    for (int start = top; start >= lo; --start) rec(start - 1, acc * f_decorated(mu, s, start, top));
  };
  rec(hi, UEAExpression::identity());
  return out;
}

SparseVector commutator_with(const RepModule& mod, const Generator& e, const UEAExpression& x,
                             const SparseVector& v) {
  return mod.apply(e, x.apply(mod, v)) - x.apply(mod, mod.apply(e, v));
}

}  // namespace

StructuralReport check_structural_props(const Weight& mu, int s) {
  StructuralReport rep;
  for (int k = 1; k <= s; ++k) {
    const std::string name = "Q(mu(" + std::to_string(s) + "))_" + std::to_string(k);
    const UEAExpression q = q_element(mu, s, k);
    check_shape(rep, name, q, k, s);
    rep.expect(q == composition_form(mu, s, k, s), name + ": closed form mismatch");
  }
  for (int i = 1; i <= s; ++i) {
    for (int h = 1; h <= s - i + 1; ++h) {
      const std::string name =
          "R(mu(" + std::to_string(s) + "))_" + std::to_string(i) + "," + std::to_string(h);
      check_shape(rep, name, r_element(mu, s, i, h), i, i + h - 1);
    }
    rep.expect(r_element(mu, s, i, s - i + 1) == q_element(mu, s, i),
               "R_{i,s-i+1} != Q_i for i=" + std::to_string(i));
  }
  return rep;
}

StructuralReport check_efp_identities(const SemidirectModule& mod, const Weight& mu, int s) {
  StructuralReport rep;
  const RepModule& m = mod.base;
  const std::size_t d = mod.dim();
  auto matches = [&](const Generator& e, const UEAExpression& x,
                     const std::function<SparseVector(const SparseVector&)>& rhs) {
    for (std::size_t c = 0; c < d; ++c) {
      const SparseVector v = SparseVector::unit(d, c);
      if (commutator_with(m, e, x, v) != rhs(v)) return false;
    }
    return true;
  };
  auto zero = [&](const SparseVector&) { return SparseVector(d); };
  const std::string sfx = " (s=" + std::to_string(s) + ", mu=" + mu.to_string() + ")";

  for (int j = 1; j <= s; ++j) {
    const Generator e = Generator::e(j, j);
    const std::string ej = "[E_" + std::to_string(j);
    for (int l = j + 1; l <= s; ++l) {
      const UEAExpression rhs = f_decorated(mu, s, j + 1, l).scaled(Rational(-mu_ks(mu, j + 1, s)));
      rep.expect(matches(e, f_decorated(mu, s, j, l), [&](const SparseVector& v) { return rhs.apply(m, v); }),
                 ej + ",F_{j,l}] l=" + std::to_string(l) + sfx);
    }
    for (int l = 1; l < j; ++l) {
      const UEAExpression rhs = f_decorated(mu, s, l, j - 1).scaled(Rational(mu_ks(mu, j, s)));
      rep.expect(matches(e, f_decorated(mu, s, l, j), [&](const SparseVector& v) { return rhs.apply(m, v); }),
                 ej + ",F_{l,j}] l=" + std::to_string(l) + sfx);
    }
    rep.expect(matches(e, f_decorated(mu, s, j, j),
                       [&](const SparseVector& v) { return m.apply(Generator::h(j), v); }),
               ej + ",F_j] = H_j" + sfx);
    for (int l = j + 1; l <= s + 1; ++l)
      rep.expect(matches(e, q_element(mu, s, l), zero), ej + ",Q_l] l=" + std::to_string(l) + sfx);
    for (int i = 1; i <= s; ++i)
      for (int h = 0; h <= s - i + 1; ++h)
        if (i > j || i + h <= j)
          rep.expect(matches(e, r_element(mu, s, i, h), zero),
                     ej + ",R_{i,h}] i=" + std::to_string(i) + " h=" + std::to_string(h) + sfx);
    for (int i = 1; i <= s; ++i) {
      UEAExpression rhs;
      if (j == i - 1) rhs = p_decorated(mu, s, j).scaled(Rational(mu_ks(mu, j, s - 1)));
      rep.expect(matches(e, p_decorated(mu, s, i), [&](const SparseVector& v) { return rhs.apply(m, v); }),
                 ej + ",P_i] i=" + std::to_string(i) + sfx);
    }
  }
  return rep;
}

}  // namespace sdrep
