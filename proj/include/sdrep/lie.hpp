#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sdrep/linalg.hpp"

namespace sdrep {

// Coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  static Weight zero(int rank);
  // omega_i; omega_0 and omega_{rank+1} are zero.
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coords.size()); }
  // 1-based; 0 outside 1..rank.
  int component(int i) const;
  bool is_dominant() const;
  int sum() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(int k) const;

  std::string to_string() const;
  auto operator<=>(const Weight&) const = default;
};

Weight parse_weight(std::string_view text);

// alpha_{p,q} = alpha_p + ... + alpha_q, 1 <= p <= q.
struct PositiveRoot {
  int p = 1;
  int q = 1;
  auto operator<=>(const PositiveRoot&) const = default;
  std::string to_string() const;
};

// alpha_{p,q} in the fundamental-weight basis of a rank-r algebra.
Weight root_weight(int rank, const PositiveRoot& a);

enum class GenKind { H, E, F, P };

struct Generator {
  GenKind kind = GenKind::H;
  int p = 1;
  int q = 1;

  static Generator h(int i) { return {GenKind::H, i, i}; }
  static Generator e(int p, int q) { return {GenKind::E, p, q}; }
  static Generator f(int p, int q) { return {GenKind::F, p, q}; }
  static Generator pj(int j) { return {GenKind::P, j, j}; }

  auto operator<=>(const Generator&) const = default;
  // "H[i]", "E[p,q]", "F[p,q]", "P[j]".
  std::string to_string() const;
};

Generator parse_generator(std::string_view text);

using LieElement = std::map<Generator, Rational>;

LieElement lie_element(const Generator& g, const Rational& c = Rational(1));
LieElement add(const LieElement& a, const LieElement& b, const Rational& scale = Rational(1));
std::string to_string(const LieElement& x);

struct SignedGenerator {
  int sign = 1;
  Generator gen;
  bool operator==(const SignedGenerator&) const = default;
};

struct AlgebraSpec {
  enum class Kind { SL, Semidirect };
  Kind kind = Kind::SL;
  // SL(m): m - 1.  Semidirect sl(n+1) x C^{n+1}: n.
  int rank = 1;

  static AlgebraSpec sl(int m);
  static AlgebraSpec semidirect(int n);

  int matrix_size() const { return rank + 1; }
  bool contains(const Generator& g) const;
  std::vector<Generator> generators() const;
  std::vector<Generator> cartan() const;
  std::vector<Generator> raising() const;
  std::vector<Generator> lowering() const;
  std::vector<Generator> radical() const;
  // The part spanned by H, E, F.
  std::vector<Generator> levi() const;

  bool operator==(const AlgebraSpec&) const = default;
};

// ad-weight of a generator in the fundamental-weight basis.
Weight generator_weight(const AlgebraSpec& alg, const Generator& g);

LieElement bracket(const AlgebraSpec& alg, const Generator& x, const Generator& y);
LieElement bracket(const AlgebraSpec& alg, const LieElement& x, const LieElement& y);

// Defining representation of sl(m) in matrix units.
SparseMatrix matrix_realization(const Generator& g, int m);
SparseMatrix matrix_realization(const LieElement& x, int m);
// Matrix unit A_{ij} (1-based) of size m.
SparseMatrix matrix_unit(int m, int i, int j);

// Embeddings of sl(n+1) x C^{n+1} into sl(n+2).
SignedGenerator embed_phi(const Generator& g, int n);
SignedGenerator embed_theta(const Generator& g, int n);

// Involution of sl(n+2) reversing the Dynkin diagram.
SignedGenerator xi_automorphism(const Generator& g, int n);
Weight xi_on_weight(const Weight& w);

}  // namespace sdrep
