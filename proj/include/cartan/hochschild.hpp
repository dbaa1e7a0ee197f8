#pragma once

// The normalized Hochschild chain complex C_*(A) = A (x) T(s A_bar) of a free CDGA with the
// differential d_1 + d_2, Connes' B, the operators L_theta, e_theta, S_theta, the cap product
// with Hochschild cochains, the shuffle product and the comparison maps to the loop model.

#include "cartan/derivation.hpp"
#include "cartan/homology.hpp"
#include "cartan/loop_model.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cartan {

/// a0[a1|...|an]. In a Chain every tail entry is a non-unit monomial.
struct ChainWord {
  Monomial head;
  std::vector<Monomial> tail;

  std::size_t length() const { return tail.size(); }
  friend auto operator<=>(const ChainWord&, const ChainWord&) = default;
};

/// Finite combination of words. A normalized chain (the default) drops every word with a unit
/// tail entry; a raw chain keeps them. Sums involving a raw chain are raw.
class Chain {
 public:
  Chain() = default;
  Chain(const ChainWord& w, const Rational& c = 1, bool normalized = true) : normalized_(normalized) { add(w, c); }
  static Chain raw() {
    Chain c;
    c.normalized_ = false;
    return c;
  }

  bool normalized() const { return normalized_; }
  void add(const ChainWord& w, const Rational& c);
  void add(const Chain& other, const Rational& scale = 1);

  const std::map<ChainWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Chain& operator+=(const Chain& o) {
    add(o);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    add(o, Rational(-1));
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(const Chain& a) { return Chain() - a; }
  friend Chain operator*(const Rational& c, const Chain& a) {
    Chain out;
    out.add(a, c);
    return out;
  }
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

 private:
  std::map<ChainWord, Rational> terms_;
  bool normalized_ = true;
};

/// A Hochschild cochain f(a0[a1|...|ap]a_{p+1}) with values in A, of fixed arity p.
struct HochschildCochain {
  std::size_t arity = 0;
  std::function<Terms(const Monomial& a0, const std::vector<Monomial>& middle, const Monomial& last)> value;
};

class HochschildComplex {
 public:
  /// With normalized = false every operator works on the full (unnormalized) complex.
  explicit HochschildComplex(PresentationPtr algebra, bool normalized = true);

  const PresentationPtr& algebra() const { return a_; }
  bool normalized() const { return normalized_; }
  Chain zero() const { return normalized_ ? Chain() : Chain::raw(); }
  Chain single(const ChainWord& w, const Rational& c = 1) const { return Chain(w, c, normalized_); }
  int degree(const ChainWord& w) const;
  /// |a0| + sum_{j<i} |s a_j|, for 1 <= i <= n + 1.
  int epsilon(const ChainWord& w, std::size_t i) const;
  std::string format(const ChainWord& w) const;
  std::string format(const Chain& c) const;

  Chain d1_component(const ChainWord& w, std::size_t i) const;
  Chain d2_component(const ChainWord& w, std::size_t i) const;
  Chain d1(const Chain& c) const;
  Chain d2(const Chain& c) const;
  Chain d(const Chain& c) const;

  /// Cyclic operator t_n; the result may carry a unit in its tail (it is not normalized).
  std::pair<int, ChainWord> t(const ChainWord& w) const;
  Chain t(const Chain& c) const;
  Chain s(const Chain& c) const;
  Chain B(const Chain& c) const;

  Chain L_component(const Derivation& theta, const Chain& c, std::size_t i) const;
  Chain L(const Derivation& theta, const Chain& c) const;
  Chain e(const Derivation& theta, const Chain& c) const;
  Chain S(const Derivation& theta, const Chain& c) const;

  /// The cochain e'_theta of arity 1.
  HochschildCochain e_prime(const Derivation& theta) const;
  /// f cap a0[a1|...|an] = f(a0[a1|...|ap]1)[a_{p+1}|...|an].
  Chain cap(const HochschildCochain& f, const Chain& c) const;

  Chain shuffle(const Chain& x, const Chain& y) const;

  /// Normalized words of total degree n. Needs every generator in degree >= 2.
  std::vector<ChainWord> basis(int n) const;
  BasisComplex<ChainWord> complex() const;

 private:
  template <class F>
  Chain map_words(const Chain& c, F&& f) const;
  Chain word_d1(const ChainWord& w) const;
  Chain word_d2(const ChainWord& w) const;
  Chain word_L(const Derivation& theta, const ChainWord& w, std::size_t i) const;

  PresentationPtr a_;
  bool normalized_ = true;
};

/// Theta(a0[a1|...|an]) = (1/n!) a0 s(a1) ... s(an) in L.
Element theta_map(const LoopModel& model, const Chain& c);
/// Theta'(a v1_bar ... vk_bar) = a * [v1] * ... * [vk] (shuffle products).
Chain theta_prime(const LoopModel& model, const HochschildComplex& hc, const Element& w);

}  // namespace cartan
