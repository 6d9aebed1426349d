#include "sdrep/ffl.hpp"

#include <functional>
#include <stdexcept>

namespace sdrep {

int MultiExponent::at(const PositiveRoot& a) const {
  auto it = exps.find(a);
  return it == exps.end() ? 0 : it->second;
}

int MultiExponent::total() const {
  int t = 0;
  for (const auto& [a, s] : exps) t += s;
  return t;
}

std::vector<DyckPath> enumerate_dyck_paths(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<DyckPath> out;
  std::function<void(std::vector<PositiveRoot>&)> extend = [&](std::vector<PositiveRoot>& path) {
    const PositiveRoot last = path.back();
    if (path.size() > 1 && last.p == last.q) out.push_back({path});
    if (last.q + 1 <= n) {
      path.push_back({last.p, last.q + 1});
      extend(path);
      path.pop_back();
    }
    if (last.p + 1 <= last.q) {
      path.push_back({last.p + 1, last.q});
      extend(path);
      path.pop_back();
    }
  };
  for (int i = 1; i <= n; ++i) {
    out.push_back({{PositiveRoot{i, i}}});
    if (i < n) {
      std::vector<PositiveRoot> path{{i, i}, {i, i + 1}};
      extend(path);
    }
  }
  return out;
}

bool pbw_greater(const PositiveRoot& a, const PositiveRoot& b) {
  return a.p < b.p || (a.p == b.p && a.q < b.q);
}

std::vector<PositiveRoot> pbw_order(int n) {
  std::vector<PositiveRoot> out;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) out.push_back({p, q});
  return out;
}

std::vector<MultiExponent> s_lambda(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("s_lambda needs a dominant weight");
  const int n = lambda.rank();
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  const auto roots = pbw_order(n);
  const auto paths = enumerate_dyck_paths(n);

  auto partial = [&](int p, int q) {
    int s = 0;
    for (int i = p; i <= q; ++i) s += lambda.component(i);
    return s;
  };
  std::map<PositiveRoot, std::size_t> pos;
  for (std::size_t i = 0; i < roots.size(); ++i) pos[roots[i]] = i;

  // Per path: indices of its roots and its bound.
  std::vector<std::pair<std::vector<std::size_t>, int>> constraints;
  for (const auto& path : paths) {
    std::vector<std::size_t> idx;
    for (const auto& a : path.roots) idx.push_back(pos.at(a));
    constraints.emplace_back(idx, partial(path.start(), path.end()));
  }

  std::vector<MultiExponent> out;
  std::vector<int> s(roots.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    for (const auto& [idx, bound] : constraints) {
      int t = 0;
      for (std::size_t i : idx)
        if (i < k) t += s[i];
      if (t > bound) return;
    }
    if (k == roots.size()) {
      MultiExponent m;
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (s[i] != 0) m.exps[roots[i]] = s[i];
      out.push_back(std::move(m));
      return;
    }
    const int box = partial(roots[k].p, roots[k].q);
    for (int v = 0; v <= box; ++v) {
      s[k] = v;
      rec(k + 1);
    }
    s[k] = 0;
  };
  rec(0);
  return out;
}

std::uint64_t weyl_dim(const Weight& lambda, int m) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight");
  if (lambda.rank() != m - 1) throw std::invalid_argument("weight rank does not match sl(m)");
  Rational d(1);
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      long s = 0;
      for (int k = i; k <= j; ++k) s += lambda.component(k);
      d *= make_rational(s + j - i + 1, j - i + 1);
    }
  }
  if (d.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return d.get_num().get_ui();
}

std::uint64_t weyl_dim(const Weight& lambda) { return weyl_dim(lambda, lambda.rank() + 1); }

}  // namespace sdrep
