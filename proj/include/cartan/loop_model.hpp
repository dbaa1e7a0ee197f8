#pragma once

// The free loop model L = AV (x) A(V_bar) with its derivation s, the operators L_theta and
// e_theta, word-length (Hodge) pieces, the BV operator on cohomology, the evaluation pairing
// and detection of the fundamental class.

#include "cartan/der_complex.hpp"
#include "cartan/derivation.hpp"
#include "cartan/homology.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cartan {

class LoopModel {
 public:
  LoopModel() = default;

  /// Throws SimplyConnectedError if some generator has degree 1.
  static LoopModel build(PresentationPtr base);

  const PresentationPtr& base() const { return base_; }
  /// Generators v_1..v_n, then v_1_bar..v_n_bar.
  const PresentationPtr& extended() const { return ext_; }
  std::size_t rank() const { return base_->size(); }
  std::size_t bar(std::size_t gen) const { return rank() + gen; }
  bool is_barred(std::size_t ext_gen) const { return ext_gen >= rank(); }

  /// The degree -1 derivation v -> v_bar, v_bar -> 0.
  const Derivation& s() const { return s_; }
  const Derivation& d() const { return d_; }

  Element s(const Element& a) const { return s_.apply(a); }
  Element d(const Element& a) const { return d_.apply(a); }

  /// Number of barred factors.
  int word_length(const Monomial& m) const;
  /// Splits m = a * w with a in AV (as a base monomial) and w purely barred.
  std::pair<Monomial, Monomial> split(const Monomial& m) const;
  Monomial embed(const Monomial& base_monomial) const { return base_->embed(base_monomial, *ext_); }
  Element embed(const Element& base_element) const;
  /// Restriction of a word-length-0 element of L to AV. Throws DegreeError otherwise.
  Element restrict_to_base(const Element& a) const;

  std::vector<Monomial> basis(int n) const { return ext_->basis(n); }
  std::vector<Monomial> hodge_basis(int n, int k) const;
  /// Purely barred monomials of word length k.
  std::vector<Monomial> bar_words(int k) const;

  BasisComplex<Monomial> complex() const;
  /// L_(k); k = 0 is AV itself (in extended coordinates).
  BasisComplex<Monomial> hodge_complex(int k) const;
  BasisComplex<Monomial> base_complex() const;

 private:
  PresentationPtr base_, ext_;
  Derivation s_, d_;
};

/// L_theta on L: v -> theta(v), v_bar -> (-1)^{|theta|} s(theta(v)). Degree |theta|.
Derivation op_L(const LoopModel& model, const Derivation& theta);
/// e_theta on L: v -> 0, v_bar -> (-1)^{|theta|} theta(v). Cohomological degree |theta| + 1.
Derivation op_e(const LoopModel& model, const Derivation& theta);

/// Matrix of the map H^n(L) -> H^{n-1}(L) induced by s.
GradedMapSlice bv_on_cohomology(const LoopModel& model, int n);

DegreeCohomology<Monomial> loop_cohomology(const LoopModel& model, int n);
DegreeCohomology<Monomial> hodge_cohomology(const LoopModel& model, int n, int k);

/// Cohomology-level Poincare duality data of AV.
struct FundamentalClass {
  int dimension = 0;  // formal dimension m
  DegreeCohomology<Monomial> top;  // H^m(AV), one-dimensional
  Element representative;          // echelon representative with leading coefficient 1
};

/// Detects the formal dimension and checks H^m = Q, H^j = 0 for m < j <= m + top generator
/// degree, and a perfect product pairing H^j x H^{m-j} -> H^m. Throws NoPoincareDuality.
FundamentalClass fundamental_class(const LoopModel& model);

/// Coordinate of a top-degree cocycle of AV (given in L) against the fundamental class.
Rational fundamental_coordinate(const FundamentalClass& fc, const Element& top_cocycle);

/// A basis element of Hom_{AV}(L_(k), AV): the word w goes to the base monomial m, the other
/// words of length k go to 0. Degree |m| - |w|.
struct HomKey {
  Monomial word;   // extended monomial, purely barred, length k
  Monomial value;  // extended monomial of word length 0
  friend auto operator<=>(const HomKey&, const HomKey&) = default;
};

/// (Df)(w) = d(f(w)) - (-1)^{|f|} f(dw).
BasisComplex<HomKey> hom_complex(const LoopModel& model, int k);

/// f(alpha) for f in Hom_{AV}(L_(k), AV) and alpha in L_(k), using f(a w) = (-1)^{|f||a|} a f(w).
Element evaluate_hom(const LoopModel& model, const Combination<HomKey>& f, const Element& alpha);

/// lambda(theta) as an element of Hom_{AV}(L_(1), AV).
Combination<HomKey> lambda_hom(const LoopModel& model, const Derivation& theta);

struct PairingMatrix {
  int k = 0, n = 0, m = 0;
  std::size_t rows = 0, cols = 0;  // dim H^{-n}(Hom), dim H^{m+n}(L_(k))
  std::vector<std::vector<Rational>> entries;
  std::size_t rank = 0;
  bool nondegenerate() const { return rows == cols && rank == rows; }
};

/// Evaluation pairing H^{-n}(Hom_{AV}(L_(k), AV)) x H^{m+n}(L_(k)) -> H^m(AV) = Q.
PairingMatrix pairing_matrix(const LoopModel& model, int k, int n);
PairingMatrix pairing_matrix(const LoopModel& model, const FundamentalClass& fc, int k, int n);

/// A cocycle alpha in L_(1) with [e_theta(alpha)] equal to the fundamental class, searched
/// over the whole cohomology of L_(1) in the right degree. nullopt when none exists.
std::optional<Element> hit_fundamental_class(const LoopModel& model, const FundamentalClass& fc,
                                             const Derivation& theta);

}  // namespace cartan
