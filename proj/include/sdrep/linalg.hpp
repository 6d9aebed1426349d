#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sdrep {

using Rational = mpq_class;

// Canonical num/den. Throws std::domain_error on a zero denominator.
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  static SparseVector unit(std::size_t dim, std::size_t i);
  // Sorts, merges duplicate indices and drops zeros.
  static SparseVector from_entries(std::size_t dim, std::vector<Entry> entries);
  static SparseVector from_dense(const std::vector<Rational>& dense);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational at(std::size_t i) const;
  std::size_t leading_index() const;
  std::vector<Rational> to_dense() const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Rational& c);
  void axpy(const Rational& a, const SparseVector& x);

  bool operator==(const SparseVector& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

SparseVector operator+(SparseVector a, const SparseVector& b);
SparseVector operator-(SparseVector a, const SparseVector& b);
SparseVector operator*(const Rational& c, SparseVector v);

// Row and column views are both kept; the matrix is immutable.
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVector& row(std::size_t i) const { return row_data_.at(i); }
  const SparseVector& column(std::size_t j) const { return col_data_.at(j); }
  Rational at(std::size_t i, std::size_t j) const { return row_data_.at(i).at(j); }

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix transpose() const;

  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix scaled(const Rational& c) const;

  bool operator==(const SparseMatrix& other) const {
    return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ && row_data_ == other.row_data_;
  }

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<SparseVector> row_data_;
  std::vector<SparseVector> col_data_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

struct RrefResult {
  SparseMatrix matrix;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// A subspace held as a fully reduced echelon basis, rows sorted by pivot.
class SpanHandle {
 public:
  SpanHandle() = default;
  explicit SpanHandle(std::size_t dim) : dim_(dim) {}
  SpanHandle(std::size_t dim, const std::vector<SparseVector>& vectors);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // True when the rank grew.
  bool insert(const SparseVector& v);

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const SpanHandle& other) const;
  // Coefficients with respect to basis(). Throws if v is outside the span.
  SparseVector coordinates(const SparseVector& v) const;

  SpanHandle intersect(const SpanHandle& other) const;
  SpanHandle sum(const SpanHandle& other) const;

  std::vector<std::size_t> free_columns() const;
  // Image in dim - rank coordinates indexed by free_columns().
  SparseVector project_to_quotient(const SparseVector& v) const;

  bool operator==(const SpanHandle& other) const {
    return dim_ == other.dim_ && rows_ == other.rows_;
  }

 private:
  std::ptrdiff_t row_of_pivot(std::size_t col) const;

  std::size_t dim_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace sdrep
