#include "sdrep/uea.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdrep {

namespace {

void check_symbol(const Generator& g) {
  if (g.kind != GenKind::F && g.kind != GenKind::P)
    throw std::invalid_argument("expressions only carry F and P symbols: " + g.to_string());
}

void check_range(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

UEAExpression UEAExpression::identity() {
  UEAExpression e;
  e.terms_.push_back({Rational(1), {}});
  return e;
}

UEAExpression UEAExpression::single(const Rational& c, const Generator& g) {
  return from_monomials({{c, {g}}});
}

UEAExpression UEAExpression::from_monomials(std::vector<Monomial> terms) {
  for (const auto& m : terms)
    for (const auto& g : m.factors) check_symbol(g);
  UEAExpression e;
  e.terms_ = std::move(terms);
  e.canonicalize();
  return e;
}

void UEAExpression::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Monomial& a, const Monomial& b) { return a.factors < b.factors; });
  std::vector<Monomial> out;
  for (auto& m : terms_) {
    if (!out.empty() && out.back().factors == m.factors)
      out.back().coeff += m.coeff;
    else
      out.push_back(std::move(m));
  }
  std::erase_if(out, [](const Monomial& m) { return sgn(m.coeff) == 0; });
  terms_ = std::move(out);
}

UEAExpression UEAExpression::operator+(const UEAExpression& o) const {
  UEAExpression e = *this;
  e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
  e.canonicalize();
  return e;
}

UEAExpression UEAExpression::operator-(const UEAExpression& o) const {
  return *this + o.scaled(Rational(-1));
}

UEAExpression UEAExpression::operator*(const UEAExpression& o) const {
  UEAExpression e;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m{a.coeff * b.coeff, a.factors};
      m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
      e.terms_.push_back(std::move(m));
    }
  }
  e.canonicalize();
  return e;
}

UEAExpression UEAExpression::scaled(const Rational& c) const {
  UEAExpression e = *this;
  for (auto& m : e.terms_) m.coeff *= c;
  e.canonicalize();
  return e;
}

bool UEAExpression::operator==(const UEAExpression& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].factors != o.terms_[i].factors) return false;
  return true;
}

std::string UEAExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].coeff.get_str();
    if (terms_[i].factors.empty()) os << "*I";
    for (const auto& g : terms_[i].factors) os << "*" << g.to_string();
  }
  return os.str();
}

SparseVector UEAExpression::apply(const RepModule& mod, const SparseVector& v) const {
  SparseVector out(mod.dim());
  for (const auto& m : terms_) {
    SparseVector w = v;
    for (auto it = m.factors.rbegin(); it != m.factors.rend() && !w.is_zero(); ++it) w = mod.apply(*it, w);
    out.axpy(m.coeff, w);
  }
  return out;
}

SparseMatrix UEAExpression::as_matrix(const RepModule& mod) const {
  std::vector<SparseVector> cols;
  for (std::size_t c = 0; c < mod.dim(); ++c) cols.push_back(apply(mod, SparseVector::unit(mod.dim(), c)));
  return SparseMatrix::from_columns(mod.dim(), cols);
}

// ---------------------------------------------------------------------------

long mu_ks(const Weight& mu, int k, int s) {
  check_range(1 <= k && k <= s && s <= mu.rank(), "mu_ks index out of range");
  long total = 0;
  for (int i = k; i <= s; ++i) total += mu.component(i) + 1;
  return -total;
}

UEAExpression f_decorated(const Weight& mu, int s, int i, int j) {
  check_range(1 <= i && i <= j && j <= s && s <= mu.rank(), "f_decorated index out of range");
  Rational c(1);
  for (int k = i + 1; k <= j; ++k) c *= mu_ks(mu, k, s);
  return UEAExpression::single(c, Generator::f(i, j));
}

UEAExpression p_decorated(const Weight& mu, int s, int i) {
  check_range(1 <= i && i <= s && s <= mu.rank() + 1, "p_decorated index out of range");
  Rational c(1);
  for (int k = 1; k <= i - 1; ++k) c *= mu_ks(mu, k, s - 1);
  return UEAExpression::single(c, Generator::pj(i));
}

UEAExpression q_element(const Weight& mu, int s, int k) {
  check_range(1 <= s && s <= mu.rank() && 1 <= k && k <= s + 1, "q_element index out of range");
  std::vector<UEAExpression> q(s + 2);
  q[s + 1] = UEAExpression::identity();
  for (int kk = s; kk >= k; --kk) {
    UEAExpression acc;
    for (int l = kk; l <= s; ++l) acc = acc + q[l + 1] * f_decorated(mu, s, kk, l);
    q[kk] = acc;
  }
  return q[k];
}

UEAExpression r_element(const Weight& mu, int s, int i, int k) {
  check_range(1 <= i && i <= s && s <= mu.rank() && 0 <= k && k <= s - i + 1,
              "r_element index out of range");
  std::vector<UEAExpression> r(k + 1);
  r[0] = UEAExpression::identity();
  for (int kk = 1; kk <= k; ++kk) {
    UEAExpression acc;
    for (int l = 0; l <= kk - 1; ++l) acc = acc + f_decorated(mu, s, i + l, i + kk - 1) * r[l];
    r[kk] = acc;
  }
  return r[k];
}

UEAExpression phi_expression(const Weight& mu, int i) {
  check_range(1 <= i && i <= mu.rank() + 1, "phi index out of range");
  UEAExpression out = p_decorated(mu, i, i);
  for (int k = 1; k <= i - 1; ++k) out = out + q_element(mu, i - 1, k) * p_decorated(mu, i, k);
  return out;
}

UEAExpression f_hat(const Weight& mu, int i, int j, int k) {
  check_range(1 <= j && j <= k && k <= mu.rank() && 1 <= i && i <= k, "f_hat index out of range");
  const long d = mu_ks(mu, i, k);
  if (d == 0) throw std::domain_error("vanishing denominator in f_hat");
  return UEAExpression::single(make_rational(1, d < 0 ? -d : d), Generator::f(j, k));
}

UEAExpression q_hat(const Weight& mu, int s, int i, int k) {
  check_range(1 <= i && i <= s && s <= mu.rank() && i <= k && k <= s + 1, "q_hat index out of range");
  std::vector<UEAExpression> q(s + 2);
  q[s + 1] = UEAExpression::identity();
  for (int kk = s; kk >= k; --kk) {
    UEAExpression acc;
    for (int l = kk + 1; l <= s + 1; ++l) acc = acc + q[l] * f_hat(mu, i, kk, l - 1);
    q[kk] = acc;
  }
  return q[k];
}

Rational phi_hat_scale(const Weight& mu, int i) {
  check_range(1 <= i && i <= mu.rank() + 1, "phi index out of range");
  Rational denom(1);
  for (int k = 1; k <= i - 1; ++k) {
    const long d = mu_ks(mu, k, i - 1);
    if (d == 0) throw std::domain_error("vanishing denominator in phi_hat");
    denom *= (d < 0 ? -d : d);
  }
  return 1 / denom;
}

UEAExpression p_reconstruction(const Weight& mu, int i) {
  auto sign = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
  UEAExpression out = phi_expression(mu, i).scaled(sign(i + 1) * phi_hat_scale(mu, i));
  for (int k = 1; k <= i - 1; ++k) {
    const UEAExpression hat_k = phi_expression(mu, k).scaled(phi_hat_scale(mu, k));
    out = out + (q_hat(mu, i - 1, k, k) * hat_k).scaled(sign(k + 1));
  }
  return out;
}

}  // namespace sdrep
