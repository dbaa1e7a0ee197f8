#pragma once

// Derivations of free graded-commutative algebras, stored by their values on generators.

#include "cartan/algebra.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cartan {

/// A degree-homogeneous derivation domain -> codomain. The codomain contains the domain's
/// generators as a prefix (the structure map is that inclusion), so every evaluation is
///   theta(ab) = theta(a) b + (-1)^{|theta||a|} a theta(b).
class Derivation {
 public:
  Derivation() = default;
  /// Zero derivation.
  Derivation(PresentationPtr domain, PresentationPtr codomain, int degree);
  Derivation(PresentationPtr domain, int degree) : Derivation(domain, domain, degree) {}

  /// Values on generators by index; every value must be homogeneous of degree |g| + degree.
  static Derivation from_values(PresentationPtr domain, PresentationPtr codomain, int degree,
                                const std::map<std::size_t, Element>& values);
  /// (v, alpha): v -> alpha, other generators -> 0.
  static Derivation single(PresentationPtr domain, std::size_t gen, const Element& value);
  /// The differential of the presentation as a degree +1 derivation.
  static Derivation differential(PresentationPtr algebra);

  const PresentationPtr& domain() const { return domain_; }
  const PresentationPtr& codomain() const { return codomain_; }
  int degree() const { return degree_; }
  bool is_endomorphism() const { return domain_->same_generators(*codomain_); }
  bool is_zero() const;

  Element value(std::size_t gen) const { return Element(codomain_, values_[gen]); }
  const Terms& value_terms(std::size_t gen) const { return values_[gen]; }
  const std::vector<Terms>& values() const { return values_; }

  Terms apply(const Monomial& m) const;
  Element apply(const Element& a) const;
  Element operator()(const Element& a) const { return apply(a); }

  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  Derivation& operator*=(const Rational& c);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Rational& c, Derivation a) { return a *= c; }

  /// Equality of derivations is equality on generators.
  friend bool operator==(const Derivation& a, const Derivation& b);

  /// "(y,1) + (x,-3*x^2)" style listing of nonzero generator values.
  std::string to_string() const;

 private:
  void check_compatible(const Derivation& other) const;

  PresentationPtr domain_, codomain_;
  int degree_ = 0;
  std::vector<Terms> values_;  // indexed by domain generator
};

/// Leibniz evaluation of theta on a.
Element evaluate(const Derivation& theta, const Element& a);

/// [d, theta] = d o theta - (-1)^{|theta|} theta o d, of degree |theta| + 1. Works for module
/// codomains as well: d on the left is the codomain differential.
Derivation der_differential(const Derivation& theta);

/// [theta, rho] = theta rho - (-1)^{|theta||rho|} rho theta. Both must be endomorphisms of the
/// same algebra; throws PresentationMismatch otherwise.
Derivation lie_bracket(const Derivation& theta, const Derivation& rho);

/// Values of lambda(theta) on the barred generators: lambda(theta)(v_bar) = (-1)^{|theta|} theta(v).
/// Index i holds the value on v_i_bar. lambda(theta) has degree |theta| + 1.
struct BarHom {
  int degree = 0;
  std::vector<Element> values;
  friend bool operator==(const BarHom&, const BarHom&) = default;
};

BarHom lambda_iso(const Derivation& theta);
Derivation lambda_inverse(const BarHom& f, PresentationPtr algebra);

}  // namespace cartan
