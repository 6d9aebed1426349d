#include "sdrep/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdrep {

namespace {

using Entry = SparseVector::Entry;

void canonicalize(std::vector<Entry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    Rational acc = entries[i].second;
    while (j < entries.size() && entries[j].first == entries[i].first) {
      acc += entries[j].second;
      ++j;
    }
    if (sgn(acc) != 0) {
      entries[out].first = entries[i].first;
      entries[out].second = acc;
      ++out;
    }
    i = j;
  }
  entries.resize(out);
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

SparseVector SparseVector::unit(std::size_t dim, std::size_t i) {
  if (i >= dim) throw std::out_of_range("unit vector index");
  SparseVector v(dim);
  v.entries_.emplace_back(i, Rational(1));
  return v;
}

SparseVector SparseVector::from_entries(std::size_t dim, std::vector<Entry> entries) {
  for (const auto& e : entries)
    if (e.first >= dim) throw std::out_of_range("sparse vector index");
  canonicalize(entries);
  SparseVector v(dim);
  v.entries_ = std::move(entries);
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  SparseVector v(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Rational(0);
}

std::size_t SparseVector::leading_index() const {
  if (entries_.empty()) throw std::logic_error("leading index of zero vector");
  return entries_.front().first;
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& [i, x] : entries_) out[i] = x;
  return out;
}

void SparseVector::axpy(const Rational& a, const SparseVector& x) {
  if (x.dim_ != dim_) throw std::invalid_argument("dimension mismatch in axpy");
  if (sgn(a) == 0 || x.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational s = i->second + a * j->second;
      if (sgn(s) != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  axpy(Rational(1), other);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  axpy(Rational(-1), other);
  return *this;
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
SparseVector operator*(const Rational& c, SparseVector v) { return v *= c; }

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : n_rows_(rows), n_cols_(cols), row_data_(rows, SparseVector(cols)),
      col_data_(cols, SparseVector(rows)) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  std::vector<std::vector<Entry>> by_row(rows), by_col(cols);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("matrix triplet index");
    by_row[t.row].emplace_back(t.col, t.value);
    by_col[t.col].emplace_back(t.row, t.value);
  }
  SparseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    m.row_data_[i] = SparseVector::from_entries(cols, std::move(by_row[i]));
  for (std::size_t j = 0; j < cols; ++j)
    m.col_data_[j] = SparseVector::from_entries(rows, std::move(by_col[j]));
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != cols) throw std::invalid_argument("row dimension mismatch");
    for (const auto& [j, x] : rows[i].entries()) t.push_back({i, j, x});
  }
  return from_triplets(rows.size(), cols, std::move(t));
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& cols) {
  std::vector<Triplet> t;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != rows) throw std::invalid_argument("column dimension mismatch");
    for (const auto& [i, x] : cols[j].entries()) t.push_back({i, j, x});
  }
  return from_triplets(rows, cols.size(), std::move(t));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<SparseVector> rows;
  for (const auto& r : dense) {
    if (r.size() != cols) throw std::invalid_argument("ragged dense matrix");
    rows.push_back(SparseVector::from_dense(r));
  }
  return from_rows(cols, rows);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Rational(1)});
  return from_triplets(n, n, std::move(t));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : row_data_) total += r.nnz();
  return total;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.dim() != n_cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Entry> acc;
  for (const auto& [c, x] : v.entries())
    for (const auto& [r, m] : col_data_[c].entries()) acc.emplace_back(r, m * x);
  return SparseVector::from_entries(n_rows_, std::move(acc));
}

SparseMatrix SparseMatrix::transpose() const { return from_columns(n_cols_, row_data_); }

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (n_cols_ != other.n_rows_) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<SparseVector> cols;
  cols.reserve(other.n_cols_);
  for (std::size_t j = 0; j < other.n_cols_; ++j) cols.push_back(apply(other.col_data_[j]));
  return from_columns(n_rows_, cols);
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  if (n_rows_ != other.n_rows_ || n_cols_ != other.n_cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  std::vector<SparseVector> rows = row_data_;
  for (std::size_t i = 0; i < n_rows_; ++i) rows[i] += other.row_data_[i];
  return from_rows(n_cols_, rows);
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  return *this + other.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  std::vector<SparseVector> rows = row_data_;
  for (auto& r : rows) r *= c;
  return from_rows(n_cols_, rows);
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

RrefResult rref(const SparseMatrix& m) {
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  SpanHandle span(m.cols(), rows);
  std::vector<SparseVector> out = span.basis();
  while (out.size() < m.rows()) out.emplace_back(m.cols());
  return {SparseMatrix::from_rows(m.cols(), out), span.pivots()};
}

std::size_t rank(const SparseMatrix& m) { return rref(m).pivots.size(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  SpanHandle span(m.cols(), rows);
  std::vector<SparseVector> out;
  for (std::size_t f : span.free_columns()) {
    std::vector<Entry> e{{f, Rational(1)}};
    for (std::size_t r = 0; r < span.rank(); ++r) {
      Rational x = span.basis()[r].at(f);
      if (sgn(x) != 0) e.emplace_back(span.pivots()[r], -x);
    }
    out.push_back(SparseVector::from_entries(m.cols(), std::move(e)));
  }
  return out;
}

// ---------------------------------------------------------------------------

SpanHandle::SpanHandle(std::size_t dim, const std::vector<SparseVector>& vectors) : dim_(dim) {
  for (const auto& v : vectors) insert(v);
}

std::ptrdiff_t SpanHandle::row_of_pivot(std::size_t col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
  if (it != pivots_.end() && *it == col) return it - pivots_.begin();
  return -1;
}

SparseVector SpanHandle::reduce(const SparseVector& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("span dimension mismatch");
  std::vector<Entry> acc = v.entries();
  bool touched = false;
  for (const auto& [i, x] : v.entries()) {
    std::ptrdiff_t r = row_of_pivot(i);
    if (r < 0) continue;
    touched = true;
    for (const auto& [j, y] : rows_[r].entries()) acc.emplace_back(j, -x * y);
  }
  if (!touched) return v;
  return SparseVector::from_entries(dim_, std::move(acc));
}

bool SpanHandle::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.is_zero()) return false;
  std::size_t lead = r.leading_index();
  Rational inv = 1 / r.entries().front().second;
  r *= inv;
  for (auto& row : rows_) {
    Rational x = row.at(lead);
    if (sgn(x) != 0) row.axpy(-x, r);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto pos = it - pivots_.begin();
  pivots_.insert(it, lead);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool SpanHandle::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

bool SpanHandle::contains(const SpanHandle& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

SparseVector SpanHandle::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the span");
  std::vector<Entry> e;
  for (const auto& [i, x] : v.entries()) {
    std::ptrdiff_t r = row_of_pivot(i);
    if (r >= 0) e.emplace_back(static_cast<std::size_t>(r), x);
  }
  return SparseVector::from_entries(rank(), std::move(e));
}

SpanHandle SpanHandle::intersect(const SpanHandle& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("span dimension mismatch");
  SpanHandle big(2 * dim_);
  for (const auto& a : rows_) {
    std::vector<Entry> e = a.entries();
    for (const auto& [i, x] : a.entries()) e.emplace_back(i + dim_, x);
    big.insert(SparseVector::from_entries(2 * dim_, std::move(e)));
  }
  for (const auto& b : other.rows_) {
    big.insert(SparseVector::from_entries(2 * dim_, b.entries()));
  }
  SpanHandle out(dim_);
  for (std::size_t r = 0; r < big.rank(); ++r) {
    if (big.pivots_[r] < dim_) continue;
    std::vector<Entry> e;
    for (const auto& [i, x] : big.rows_[r].entries()) e.emplace_back(i - dim_, x);
    out.insert(SparseVector::from_entries(dim_, std::move(e)));
  }
  return out;
}

SpanHandle SpanHandle::sum(const SpanHandle& other) const {
  SpanHandle out = *this;
  for (const auto& r : other.rows_) out.insert(r);
  return out;
}

std::vector<std::size_t> SpanHandle::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SparseVector SpanHandle::project_to_quotient(const SparseVector& v) const {
  SparseVector r = reduce(v);
  std::vector<Entry> e;
  for (const auto& [c, x] : r.entries()) {
    auto below = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
    e.emplace_back(c - static_cast<std::size_t>(below), x);
  }
  return SparseVector::from_entries(dim_ - rank(), std::move(e));
}

}  // namespace sdrep
