#pragma once

#include <string>
#include <vector>

#include "sdrep/irrep.hpp"

namespace sdrep {

// Word in F and P symbols; the rightmost factor acts first.
struct Monomial {
  Rational coeff;
  std::vector<Generator> factors;
};

class UEAExpression {
 public:
  UEAExpression() = default;

  static UEAExpression identity();
  static UEAExpression single(const Rational& c, const Generator& g);
  static UEAExpression from_monomials(std::vector<Monomial> terms);

  const std::vector<Monomial>& monomials() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  UEAExpression operator+(const UEAExpression& o) const;
  UEAExpression operator-(const UEAExpression& o) const;
  // (a * b) applies b first.
  UEAExpression operator*(const UEAExpression& o) const;
  UEAExpression scaled(const Rational& c) const;

  bool operator==(const UEAExpression& o) const;
  std::string to_string() const;

  SparseVector apply(const RepModule& mod, const SparseVector& v) const;
  SparseMatrix as_matrix(const RepModule& mod) const;

 private:
  void canonicalize();
  std::vector<Monomial> terms_;
};

// -(mu_k + ... + mu_s + s - k + 1), 1 <= k <= s <= rank.
long mu_ks(const Weight& mu, int k, int s);

// Decorated operators; s is the superscript mu(s).
UEAExpression f_decorated(const Weight& mu, int s, int i, int j);
// 1 <= i <= s <= rank + 1.
UEAExpression p_decorated(const Weight& mu, int s, int i);
// 1 <= s <= rank, 1 <= k <= s + 1.
UEAExpression q_element(const Weight& mu, int s, int k);
// 1 <= i <= s <= rank, 0 <= k <= s - i + 1.
UEAExpression r_element(const Weight& mu, int s, int i, int k);
// 1 <= i <= rank + 1.
UEAExpression phi_expression(const Weight& mu, int i);

// F_{j,k} / |mu_{i,k}|. Throws std::domain_error when mu_{i,k} = 0.
UEAExpression f_hat(const Weight& mu, int i, int j, int k);
// 1 <= i <= s <= rank, i <= k <= s + 1.
UEAExpression q_hat(const Weight& mu, int s, int i, int k);
// 1 / prod_{k<i} |mu_{k,i-1}|.
Rational phi_hat_scale(const Weight& mu, int i);
// The combination of phi-hats expressing P_i on a weight-mu highest weight vector.
UEAExpression p_reconstruction(const Weight& mu, int i);

}  // namespace sdrep
