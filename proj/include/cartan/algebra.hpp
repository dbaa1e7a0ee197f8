#pragma once

// Free graded-commutative algebras over Q: monomials in normal form, Koszul signs,
// elements as sparse rational combinations, and presentations (generators + differential).

#include "cartan/errors.hpp"
#include "cartan/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cartan {

struct Generator {
  std::string name;
  int degree = 0;  // cohomological, >= 1

  bool odd() const { return (degree & 1) != 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector over the generators of a presentation, in declaration order.
/// Odd generators carry exponent 0 or 1; anything else is zero in the algebra and never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}

  static Monomial unit(std::size_t num_generators) { return Monomial(std::vector<int>(num_generators, 0)); }

  const std::vector<int>& exponents() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::size_t size() const { return exps_.size(); }
  bool is_unit() const;

  /// Sum of exponents.
  int length() const;

  std::vector<int>& mutable_exponents() { return exps_; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Sparse linear combination of monomials; zero coefficients are never stored.
using Terms = std::map<Monomial, Rational>;

void add_term(Terms& terms, const Monomial& m, const Rational& c);
void add_terms(Terms& terms, const Terms& other, const Rational& scale = 1);

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Generator list plus differential values. Immutable once created; `create` checks d^2 = 0.
class Presentation : public std::enable_shared_from_this<Presentation> {
  struct Token {};

 public:
  Presentation(Token, std::vector<Generator> gens, std::vector<Terms> differential);

  /// Validates names, degrees, homogeneity of d and d^2 = 0 on every generator.
  static PresentationPtr create(std::vector<Generator> gens, std::vector<Terms> differential);
  /// Zero differential.
  static PresentationPtr create(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  bool odd(std::size_t i) const { return gens_[i].odd(); }
  int max_generator_degree() const;

  int degree(const Monomial& m) const;
  Monomial generator_monomial(std::size_t i, int exponent = 1) const;
  Monomial unit() const { return Monomial::unit(size()); }

  /// Product of normal-form monomials. Returns {sign, product}; sign 0 means the product vanishes.
  std::pair<int, Monomial> multiply(const Monomial& a, const Monomial& b) const;

  /// All monomials of total degree n, ascending in the lexicographic exponent order. Cached.
  const std::vector<Monomial>& basis(int n) const;

  const Terms& differential(std::size_t gen) const { return diff_[gen]; }
  /// Leibniz extension of d to a monomial.
  Terms differential(const Monomial& m) const;
  bool has_zero_differential() const;

  /// Same generator names and degrees, in the same order.
  bool same_generators(const Presentation& other) const;
  /// The generators of *this are the first generators of `larger`.
  bool is_prefix_of(const Presentation& larger) const;
  /// Pads a monomial of *this with zero exponents so it lives in `larger`.
  Monomial embed(const Monomial& m, const Presentation& larger) const;

  /// "1", "x", "x^2*y_bar", ...
  std::string format(const Monomial& m) const;

 private:
  std::vector<Generator> gens_;
  std::vector<Terms> diff_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<Monomial>> basis_cache_;
};

/// Graded Leibniz extension of a map given on generators:
///   D(ab) = D(a) b + (-1)^{degree |a|} a D(b).
/// `values[g]` lives in `codomain`, which must contain `domain` as a prefix.
Terms leibniz(const Presentation& domain, const Presentation& codomain, int degree,
              const std::vector<Terms>& values, const Monomial& m);

/// Finite Q-linear combination of monomials of a fixed presentation.
class Element {
 public:
  Element() = default;
  explicit Element(PresentationPtr p) : p_(std::move(p)) {}
  Element(PresentationPtr p, Terms terms);
  Element(PresentationPtr p, const Monomial& m, const Rational& c = 1);

  static Element scalar(PresentationPtr p, const Rational& c);
  static Element generator(PresentationPtr p, std::size_t i);

  const PresentationPtr& presentation() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  bool is_homogeneous() const;
  /// nullopt for zero; throws DegreeError when inhomogeneous.
  std::optional<int> degree() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_compatible(const Element& other) const;

  PresentationPtr p_;
  Terms terms_;
};

/// Graded-commutative product with Koszul signs.
Element multiply(const Element& a, const Element& b);

/// Raises to a non-negative power.
Element power(const Element& a, int exponent);

/// d applied through the Leibniz rule.
Element differential(const Element& a);

/// Total-degree-n monomial basis in the fixed monomial order.
std::vector<Monomial> basis_of_degree(const Presentation& p, int n);

/// Formats a term map without needing an Element.
std::string format_terms(const Presentation& p, const Terms& terms);

}  // namespace cartan
