#include "cartan/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartan {

SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w) {
  if (is_zero(c) || w.empty()) return v;
  SparseVector out;
  out.reserve(v.size() + w.size());
  auto i = v.begin();
  auto j = w.begin();
  while (i != v.end() || j != w.end()) {
    if (j == w.end() || (i != v.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == v.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Rational s = i->second + c * j->second;
      if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Rational& c) {
  if (is_zero(c)) return {};
  SparseVector out = v;
  for (auto& [i, x] : out) x *= c;
  return out;
}

SparseVector unit_vector(std::size_t i) { return {{i, Rational(1)}}; }

Rational entry(const SparseVector& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == i) ? it->second : Rational(0);
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Rational> out(size);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVector from_dense(const std::vector<Rational>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVector& c) { return c.empty(); });
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) out = axpy(out, x, columns.at(j));
  return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("matrix shapes do not compose");
  SparseMatrix out(rows, other.cols);
  for (std::size_t j = 0; j < other.cols; ++j) out.columns[j] = apply(other.columns[j]);
  return out;
}

std::vector<std::vector<Rational>> SparseMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, x] : columns[j]) out[i][j] = x;
  return out;
}

void Echelon::reduce(SparseVector& v, SparseVector* tag_out) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t idx = v[pos].first;
    const std::size_t r = idx < pivot_row_.size() ? pivot_row_[idx] : npos;
    if (r == npos) {
      ++pos;
      continue;
    }
    const Rational c = v[pos].second;  // row has leading coefficient 1
    v = axpy(v, -c, rows_[r]);
    if (tag_out) *tag_out = axpy(*tag_out, c, tags_[r]);
    pos = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::size_t k) { return e.first < k; }) -
        v.begin());
  }
}

std::size_t Echelon::insert(SparseVector reduced, SparseVector tag) {
  if (reduced.empty()) throw std::invalid_argument("cannot insert a zero row");
  const std::size_t p = reduced.front().first;
  if (p >= pivot_row_.size()) pivot_row_.resize(p + 1, npos);
  if (pivot_row_[p] != npos) throw std::invalid_argument("row is not reduced");
  const Rational inv = 1 / reduced.front().second;
  if (inv != 1) {
    for (auto& [i, x] : reduced) x *= inv;
    for (auto& [i, x] : tag) x *= inv;
  }
  pivot_row_[p] = rows_.size();
  rows_.push_back(std::move(reduced));
  tags_.push_back(std::move(tag));
  return p;
}

ColumnReduction column_reduce(const SparseMatrix& m) {
  ColumnReduction out;
  out.image = Echelon(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j) {
    SparseVector v = m.columns[j];
    SparseVector combo;
    out.image.reduce(v, &combo);
    if (v.empty()) {
      // column_j = sum combo_k column_k, so e_j - combo spans part of the kernel
      out.kernel.push_back(axpy(unit_vector(j), Rational(-1), combo));
    } else {
      // tag records which columns produce this row
      SparseVector tag = axpy(unit_vector(j), Rational(-1), combo);
      out.image.insert(std::move(v), std::move(tag));
      ++out.rank;
    }
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return column_reduce(m).rank; }

}  // namespace cartan
