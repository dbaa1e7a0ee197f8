#pragma once

// Degree-wise cohomology of finite-type cochain complexes over Q.

#include "cartan/errors.hpp"
#include "cartan/linalg.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cartan {

/// Matrix of a linear map between two finite bases (columns are images of source vectors).
struct GradedMapSlice {
  int source_degree = 0;
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  SparseMatrix matrix;
};

/// H = ker(d_out) / im(d_in) at one degree, with chosen representatives.
class CohomologySpace {
 public:
  CohomologySpace() = default;

  int degree() const { return degree_; }
  std::size_t dimension() const { return reps_.size(); }
  std::size_t ambient() const { return d_out_.cols; }
  const std::vector<SparseVector>& representatives() const { return reps_; }

  /// Coordinates of [z] in the representative basis. Throws NotACocycle if d_out z != 0.
  std::vector<Rational> class_of(const SparseVector& z) const;
  bool is_coboundary(const SparseVector& z) const;

  friend CohomologySpace cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, int degree);

 private:
  int degree_ = 0;
  SparseMatrix d_out_;
  std::vector<SparseVector> reps_;
  Echelon echelon_;  // rows: coboundaries (tag 0), then representatives (tag e_i)
};

/// Throws NotAComplex with a witness when d_out * d_in != 0.
CohomologySpace cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, int degree = 0);
CohomologySpace cohomology(const GradedMapSlice& d_in, const GradedMapSlice& d_out);

/// Runs body(i) for i in [0, n), spread over CARTAN_THREADS workers (default 1).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
std::size_t worker_count();

/// Matrix of f over the given bases. Throws DegreeError when f leaves the target basis.
template <class Key, class Fn>
SparseMatrix assemble_matrix(const std::vector<Key>& source, const std::vector<Key>& target, Fn&& f) {
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  SparseMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::map<std::size_t, Rational> col;
    for (const auto& [key, c] : f(source[j])) {
      auto it = index.find(key);
      if (it == index.end()) throw DegreeError("map is not homogeneous: image leaves the target degree");
      col[it->second] += c;
    }
    for (auto& [i, c] : col)
      if (!is_zero(c)) m.columns[j].emplace_back(i, std::move(c));
  }
  return m;
}

/// A cochain complex given by a basis per degree and a differential on basis elements.
template <class Key>
struct BasisComplex {
  std::function<std::vector<Key>(int)> basis;
  std::function<std::map<Key, Rational>(const Key&)> differential;
  std::function<std::string(const Key&)> label;
};

template <class Key>
using Combination = std::map<Key, Rational>;

template <class Key>
Combination<Key> operator+(Combination<Key> a, const Combination<Key>& b) {
  for (const auto& [k, x] : b) {
    Rational& slot = a[k];
    slot += x;
    if (is_zero(slot)) a.erase(k);
  }
  return a;
}

template <class Key>
Combination<Key> operator*(const Rational& c, Combination<Key> a) {
  if (is_zero(c)) return {};
  for (auto& [k, x] : a) x *= c;
  return a;
}

template <class Key>
Combination<Key> operator-(Combination<Key> a, const Combination<Key>& b) {
  return std::move(a) + Rational(-1) * b;
}

template <class Key>
Combination<Key> combination_of(const std::vector<Key>& basis, const SparseVector& v) {
  Combination<Key> out;
  for (const auto& [i, c] : v) out.emplace(basis[i], c);
  return out;
}

template <class Key>
SparseVector coordinates(const std::vector<Key>& basis, const Combination<Key>& c) {
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, x] : c) {
    auto it = index.find(k);
    if (it == index.end()) throw DegreeError("element does not lie in the expected degree");
    acc[it->second] += x;
  }
  SparseVector out;
  for (auto& [i, x] : acc)
    if (!is_zero(x)) out.emplace_back(i, std::move(x));
  return out;
}

/// Cohomology at one degree of a BasisComplex, keeping the basis for translating elements.
template <class Key>
struct DegreeCohomology {
  int degree = 0;
  std::vector<Key> basis;
  CohomologySpace space;

  std::size_t dimension() const { return space.dimension(); }
  Combination<Key> representative(std::size_t i) const {
    return combination_of(basis, space.representatives().at(i));
  }
  std::vector<Rational> class_of(const Combination<Key>& z) const { return space.class_of(coordinates(basis, z)); }
  bool is_coboundary(const Combination<Key>& z) const { return space.is_coboundary(coordinates(basis, z)); }
};

template <class Key>
DegreeCohomology<Key> degree_cohomology(const BasisComplex<Key>& cx, int n) {
  DegreeCohomology<Key> out;
  out.degree = n;
  const std::vector<Key> below = cx.basis(n - 1);
  out.basis = cx.basis(n);
  const std::vector<Key> above = cx.basis(n + 1);
  const SparseMatrix d_in = assemble_matrix(below, out.basis, cx.differential);
  const SparseMatrix d_out = assemble_matrix(out.basis, above, cx.differential);
  out.space = cohomology(d_in, d_out, n);
  return out;
}

/// Degrees lo..hi, computed in parallel.
template <class Key>
std::vector<DegreeCohomology<Key>> cohomology_range(const BasisComplex<Key>& cx, int lo, int hi) {
  std::vector<DegreeCohomology<Key>> out(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = degree_cohomology(cx, lo + static_cast<int>(i)); });
  return out;
}

/// Matrix of the map induced on cohomology by a chain map f: H_src -> H_tgt.
template <class Key, class Fn>
std::vector<std::vector<Rational>> induced_map(const DegreeCohomology<Key>& src, const DegreeCohomology<Key>& tgt,
                                               Fn&& f) {
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < src.dimension(); ++i) cols.push_back(tgt.class_of(f(src.representative(i))));
  return cols;
}

}  // namespace cartan
