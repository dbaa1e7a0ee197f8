#pragma once

// Exact sparse linear algebra over Q: sparse vectors and column matrices, an incremental
// echelon form with bookkeeping tags, kernels and ranks by column elimination.

#include "cartan/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cartan {

/// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// v + c * w.
SparseVector axpy(const SparseVector& v, const Rational& c, const SparseVector& w);
SparseVector scaled(const SparseVector& v, const Rational& c);
SparseVector unit_vector(std::size_t i);
Rational entry(const SparseVector& v, std::size_t i);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t size);
SparseVector from_dense(const std::vector<Rational>& v);

/// rows x cols matrix stored by columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  Rational at(std::size_t r, std::size_t c) const { return entry(columns[c], r); }
  bool is_zero() const;
  SparseVector apply(const SparseVector& v) const;
  /// this * other.
  SparseMatrix compose(const SparseMatrix& other) const;
  std::vector<std::vector<Rational>> dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// Rows with distinct leading indices. Each row carries a tag vector in some auxiliary space;
/// reducing a vector also reports the tag combination of the rows that were subtracted.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient = 0) : pivot_row_(ambient, npos) {}

  std::size_t ambient() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Removes every pivot index from v. On return v = v_in - sum c_r row_r and, when tag_out is
  /// given, *tag_out = sum c_r tag_r.
  void reduce(SparseVector& v, SparseVector* tag_out = nullptr) const;

  /// Adds a reduced nonzero vector as a new row, rescaled to leading coefficient 1 (the tag is
  /// rescaled with it). Returns the pivot index.
  std::size_t insert(SparseVector reduced, SparseVector tag = {});

  const SparseVector& row(std::size_t i) const { return rows_[i]; }
  const SparseVector& tag(std::size_t i) const { return tags_[i]; }
  bool is_pivot(std::size_t index) const { return pivot_row_[index] != npos; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> tags_;
  std::vector<std::size_t> pivot_row_;
};

struct ColumnReduction {
  std::size_t rank = 0;
  /// Basis of the null space, one vector per non-pivot column, in column order.
  std::vector<SparseVector> kernel;
  /// Echelon form of the column space.
  Echelon image;
};

/// Deterministic column elimination: columns processed left to right.
ColumnReduction column_reduce(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

}  // namespace cartan
