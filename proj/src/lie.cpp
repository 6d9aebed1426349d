#include "sdrep/lie.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sdrep {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '[' || text[i] == ']' ||
                               text[i] == '(' || text[i] == ')'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw std::invalid_argument("bad integer list: " + std::string(text));
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    skip();
    if (i < text.size()) {
      if (text[i] != ',') throw std::invalid_argument("bad integer list: " + std::string(text));
      ++i;
      skip();
    }
  }
  return out;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

void require(const AlgebraSpec& alg, const Generator& g) {
  if (!alg.contains(g)) throw std::invalid_argument("generator not in algebra: " + g.to_string());
}

}  // namespace

Weight Weight::zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  if (i >= 1 && i <= rank) w.coords[i - 1] = 1;
  return w;
}

int Weight::component(int i) const {
  if (i < 1 || i > rank()) return 0;
  return coords[i - 1];
}

bool Weight::is_dominant() const {
  for (int c : coords)
    if (c < 0) return false;
  return true;
}

int Weight::sum() const {
  int s = 0;
  for (int c : coords) s += c;
  return s;
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight w = *this;
  for (int i = 0; i < rank(); ++i) w.coords[i] += o.coords[i];
  return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + o * -1; }

Weight Weight::operator*(int k) const {
  Weight w = *this;
  for (int& c : w.coords) c *= k;
  return w;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + "]";
}

Weight parse_weight(std::string_view text) { return Weight(parse_int_list(text)); }

std::string PositiveRoot::to_string() const {
  return "alpha[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

Weight root_weight(int rank, const PositiveRoot& a) {
  Weight w = Weight::zero(rank);
  for (int i = 1; i <= rank; ++i)
    w.coords[i - 1] = delta(i, a.p) - delta(i, a.p - 1) - delta(i, a.q + 1) + delta(i, a.q);
  return w;
}

std::string Generator::to_string() const {
  switch (kind) {
    case GenKind::H:
      return "H[" + std::to_string(p) + "]";
    case GenKind::P:
      return "P[" + std::to_string(p) + "]";
    case GenKind::E:
      return "E[" + std::to_string(p) + "," + std::to_string(q) + "]";
    case GenKind::F:
      return "F[" + std::to_string(p) + "," + std::to_string(q) + "]";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text.size() < 4) throw std::invalid_argument("bad generator: " + std::string(text));
  std::vector<int> idx = parse_int_list(text.substr(1));
  char c = text[0];
  if ((c == 'H' || c == 'P') && idx.size() == 1)
    return c == 'H' ? Generator::h(idx[0]) : Generator::pj(idx[0]);
  if ((c == 'E' || c == 'F') && idx.size() == 2)
    return c == 'E' ? Generator::e(idx[0], idx[1]) : Generator::f(idx[0], idx[1]);
  throw std::invalid_argument("bad generator: " + std::string(text));
}

LieElement lie_element(const Generator& g, const Rational& c) {
  LieElement x;
  if (sgn(c) != 0) x[g] = c;
  return x;
}

LieElement add(const LieElement& a, const LieElement& b, const Rational& scale) {
  LieElement out = a;
  for (const auto& [g, c] : b) {
    Rational v = out[g] + scale * c;
    if (sgn(v) == 0)
      out.erase(g);
    else
      out[g] = v;
  }
  return out;
}

std::string to_string(const LieElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*" << g.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

AlgebraSpec AlgebraSpec::sl(int m) {
  if (m < 2) throw std::invalid_argument("sl(m) needs m >= 2");
  return {Kind::SL, m - 1};
}

AlgebraSpec AlgebraSpec::semidirect(int n) {
  if (n < 1) throw std::invalid_argument("semidirect rank must be >= 1");
  return {Kind::Semidirect, n};
}

bool AlgebraSpec::contains(const Generator& g) const {
  switch (g.kind) {
    case GenKind::H:
      return g.p == g.q && g.p >= 1 && g.p <= rank;
    case GenKind::E:
    case GenKind::F:
      return g.p >= 1 && g.p <= g.q && g.q <= rank;
    case GenKind::P:
      return kind == Kind::Semidirect && g.p == g.q && g.p >= 1 && g.p <= rank + 1;
  }
  return false;
}

std::vector<Generator> AlgebraSpec::cartan() const {
  std::vector<Generator> out;
  for (int i = 1; i <= rank; ++i) out.push_back(Generator::h(i));
  return out;
}

std::vector<Generator> AlgebraSpec::raising() const {
  std::vector<Generator> out;
  for (int p = 1; p <= rank; ++p)
    for (int q = p; q <= rank; ++q) out.push_back(Generator::e(p, q));
  return out;
}

std::vector<Generator> AlgebraSpec::lowering() const {
  std::vector<Generator> out;
  for (int p = 1; p <= rank; ++p)
    for (int q = p; q <= rank; ++q) out.push_back(Generator::f(p, q));
  return out;
}

std::vector<Generator> AlgebraSpec::radical() const {
  std::vector<Generator> out;
  if (kind == Kind::Semidirect)
    for (int j = 1; j <= rank + 1; ++j) out.push_back(Generator::pj(j));
  return out;
}

std::vector<Generator> AlgebraSpec::levi() const {
  std::vector<Generator> out = cartan();
  for (const auto& g : raising()) out.push_back(g);
  for (const auto& g : lowering()) out.push_back(g);
  return out;
}

std::vector<Generator> AlgebraSpec::generators() const {
  std::vector<Generator> out = levi();
  for (const auto& g : radical()) out.push_back(g);
  return out;
}

Weight generator_weight(const AlgebraSpec& alg, const Generator& g) {
  require(alg, g);
  switch (g.kind) {
    case GenKind::H:
      return Weight::zero(alg.rank);
    case GenKind::E:
      return root_weight(alg.rank, {g.p, g.q});
    case GenKind::F:
      return root_weight(alg.rank, {g.p, g.q}) * -1;
    case GenKind::P:
      return Weight::fundamental(alg.rank, g.p) - Weight::fundamental(alg.rank, g.p - 1);
  }
  return Weight::zero(alg.rank);
}

// ---------------------------------------------------------------------------

namespace {

// Handles [x, y] for the ordered kind pairs in the table; false otherwise.
bool ordered_bracket(const Generator& x, const Generator& y, int rank, LieElement& out) {
  using K = GenKind;
  const int p = x.p, q = x.q, r = y.p, s = y.q;
  auto put = [&](const Generator& g, int c) {
    if (c != 0) out = add(out, lie_element(g, Rational(c)));
  };
  if (x.kind == K::H && y.kind == K::H) return true;
  if (x.kind == K::P && y.kind == K::P) return true;
  if (x.kind == K::H && (y.kind == K::E || y.kind == K::F)) {
    int c = root_weight(rank, {r, s}).component(p);
    put(y, y.kind == K::E ? c : -c);
    return true;
  }
  if (x.kind == K::H && y.kind == K::P) {
    put(y, delta(p, r) - delta(p, r - 1));
    return true;
  }
  if (x.kind == K::E && y.kind == K::E) {
    if (q == r - 1) put(Generator::e(p, s), 1);
    if (p == s + 1) put(Generator::e(r, q), -1);
    return true;
  }
  if (x.kind == K::F && y.kind == K::F) {
    if (q == r - 1) put(Generator::f(p, s), -1);
    if (p == s + 1) put(Generator::f(r, q), 1);
    return true;
  }
  if (x.kind == K::E && y.kind == K::F) {
    if (p == r && q == s) {
      for (int i = p; i <= q; ++i) put(Generator::h(i), 1);
    } else if (p == r) {
      if (s > q) put(Generator::f(q + 1, s), -1);
      else put(Generator::e(s + 1, q), -1);
    } else if (q == s) {
      if (p < r) put(Generator::e(p, r - 1), 1);
      else put(Generator::f(r, p - 1), 1);
    }
    return true;
  }
  if (x.kind == K::E && y.kind == K::P) {
    if (q == r - 1) put(Generator::pj(p), 1);
    return true;
  }
  if (x.kind == K::F && y.kind == K::P) {
    if (p == r) put(Generator::pj(q + 1), 1);
    return true;
  }
  return false;
}

}  // namespace

LieElement bracket(const AlgebraSpec& alg, const Generator& x, const Generator& y) {
  require(alg, x);
  require(alg, y);
  LieElement out;
  if (ordered_bracket(x, y, alg.rank, out)) return out;
  LieElement rev;
  if (!ordered_bracket(y, x, alg.rank, rev)) throw std::logic_error("bracket table incomplete");
  return add(LieElement{}, rev, Rational(-1));
}

LieElement bracket(const AlgebraSpec& alg, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out = add(out, bracket(alg, a, b), ca * cb);
  return out;
}

// ---------------------------------------------------------------------------

SparseMatrix matrix_unit(int m, int i, int j) {
  if (i < 1 || j < 1 || i > m || j > m) throw std::out_of_range("matrix unit index");
  return SparseMatrix::from_triplets(m, m, {{std::size_t(i - 1), std::size_t(j - 1), Rational(1)}});
}

SparseMatrix matrix_realization(const Generator& g, int m) {
  AlgebraSpec alg = AlgebraSpec::sl(m);
  require(alg, g);
  using T = SparseMatrix::Triplet;
  auto at = [](int i) { return static_cast<std::size_t>(i - 1); };
  switch (g.kind) {
    case GenKind::H:
      return SparseMatrix::from_triplets(
          m, m, {T{at(g.p), at(g.p), Rational(1)}, T{at(g.p + 1), at(g.p + 1), Rational(-1)}});
    case GenKind::E:
      return matrix_unit(m, g.p, g.q + 1);
    case GenKind::F:
      return matrix_unit(m, g.q + 1, g.p);
    case GenKind::P:
      break;
  }
  throw std::invalid_argument("no matrix realization for " + g.to_string());
}

SparseMatrix matrix_realization(const LieElement& x, int m) {
  SparseMatrix out(m, m);
  for (const auto& [g, c] : x) out = out + matrix_realization(g, m).scaled(c);
  return out;
}

SignedGenerator embed_phi(const Generator& g, int n) {
  require(AlgebraSpec::semidirect(n), g);
  switch (g.kind) {
    case GenKind::H:
      return {1, Generator::h(g.p + 1)};
    case GenKind::E:
      return {1, Generator::e(g.p + 1, g.q + 1)};
    case GenKind::F:
      return {1, Generator::f(g.p + 1, g.q + 1)};
    case GenKind::P:
      return {1, Generator::f(1, g.p)};
  }
  throw std::logic_error("unreachable");
}

SignedGenerator embed_theta(const Generator& g, int n) {
  require(AlgebraSpec::semidirect(n), g);
  switch (g.kind) {
    case GenKind::H:
      return {-1, Generator::h(g.p + 1)};
    case GenKind::E:
      return {-1, Generator::f(g.p + 1, g.q + 1)};
    case GenKind::F:
      return {-1, Generator::e(g.p + 1, g.q + 1)};
    case GenKind::P:
      return {1, Generator::e(1, g.p)};
  }
  throw std::logic_error("unreachable");
}

SignedGenerator xi_automorphism(const Generator& g, int n) {
  const int r = n + 1;
  require(AlgebraSpec::sl(n + 2), g);
  const int sign = ((g.q - g.p) % 2 == 0) ? 1 : -1;
  switch (g.kind) {
    case GenKind::H:
      return {1, Generator::h(r + 1 - g.p)};
    case GenKind::E:
      return {sign, Generator::e(r + 1 - g.q, r + 1 - g.p)};
    case GenKind::F:
      return {sign, Generator::f(r + 1 - g.q, r + 1 - g.p)};
    case GenKind::P:
      break;
  }
  throw std::invalid_argument("xi is defined on sl(n+2) only");
}

Weight xi_on_weight(const Weight& w) {
  return Weight(std::vector<int>(w.coords.rbegin(), w.coords.rend()));
}

}  // namespace sdrep
