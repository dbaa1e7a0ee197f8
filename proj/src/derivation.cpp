#include "cartan/derivation.hpp"

#include <sstream>

namespace cartan {

Derivation::Derivation(PresentationPtr domain, PresentationPtr codomain, int degree)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree) {
  if (!domain_->is_prefix_of(*codomain_))
    throw PresentationMismatch("derivation codomain must contain the domain generators as a prefix");
  values_.resize(domain_->size());
}

Derivation Derivation::from_values(PresentationPtr domain, PresentationPtr codomain, int degree,
                                   const std::map<std::size_t, Element>& values) {
  Derivation out(std::move(domain), std::move(codomain), degree);
  for (const auto& [gen, value] : values) {
    if (gen >= out.domain_->size()) throw PresentationMismatch("derivation value for unknown generator");
    if (value.presentation() && !value.presentation()->same_generators(*out.codomain_))
      throw PresentationMismatch("derivation value lives in the wrong algebra");
    const int want = out.domain_->generator(gen).degree + degree;
    for (const auto& [m, c] : value.terms())
      if (out.codomain_->degree(m) != want)
        throw DegreeError("value on '" + out.domain_->generator(gen).name + "' must have degree " +
                          std::to_string(want) + ", got " + value.to_string());
    out.values_[gen] = value.terms();
  }
  return out;
}

Derivation Derivation::single(PresentationPtr domain, std::size_t gen, const Element& value) {
  const auto deg = value.degree();
  const int d = deg ? *deg - domain->generator(gen).degree : 0;
  PresentationPtr codomain = value.presentation() ? value.presentation() : domain;
  if (codomain->same_generators(*domain)) codomain = domain;
  return from_values(domain, codomain, d, {{gen, value}});
}

Derivation Derivation::differential(PresentationPtr algebra) {
  Derivation out(algebra, algebra, 1);
  for (std::size_t i = 0; i < algebra->size(); ++i) out.values_[i] = algebra->differential(i);
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& v : values_)
    if (!v.empty()) return false;
  return true;
}

Terms Derivation::apply(const Monomial& m) const { return leibniz(*domain_, *codomain_, degree_, values_, m); }

Element Derivation::apply(const Element& a) const {
  if (a.presentation() && !a.presentation()->same_generators(*domain_))
    throw PresentationMismatch("derivation applied to an element of another algebra");
  Terms out;
  for (const auto& [m, c] : a.terms()) add_terms(out, apply(m), c);
  return Element(codomain_, std::move(out));
}

Element evaluate(const Derivation& theta, const Element& a) { return theta.apply(a); }

void Derivation::check_compatible(const Derivation& other) const {
  if (!domain_->same_generators(*other.domain_) || !codomain_->same_generators(*other.codomain_))
    throw PresentationMismatch("derivations act between different algebras");
  if (degree_ != other.degree_ && !is_zero() && !other.is_zero())
    throw DegreeError("cannot add derivations of degrees " + std::to_string(degree_) + " and " +
                      std::to_string(other.degree_));
}

Derivation& Derivation::operator+=(const Derivation& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (std::size_t i = 0; i < values_.size(); ++i) add_terms(values_[i], other.values_[i]);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (std::size_t i = 0; i < values_.size(); ++i) add_terms(values_[i], other.values_[i], Rational(-1));
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& v : values_) {
    if (cartan::is_zero(c)) {
      v.clear();
      continue;
    }
    for (auto& [m, coeff] : v) coeff *= c;
  }
  return *this;
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (!a.domain_->same_generators(*b.domain_) || !a.codomain_->same_generators(*b.codomain_)) return false;
  if (a.values_ != b.values_) return false;
  return a.is_zero() || a.degree_ == b.degree_;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].empty()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << domain_->generator(i).name << ',' << format_terms(*codomain_, values_[i]) << ')';
  }
  return first ? "0" : os.str();
}

Derivation der_differential(const Derivation& theta) {
  const Presentation& dom = *theta.domain();
  const Presentation& cod = *theta.codomain();
  Derivation out(theta.domain(), theta.codomain(), theta.degree() + 1);
  std::map<std::size_t, Element> values;
  const Rational sign = (theta.degree() & 1) ? Rational(1) : Rational(-1);  // -(-1)^{|theta|}
  for (std::size_t g = 0; g < dom.size(); ++g) {
    Terms v;
    for (const auto& [m, c] : theta.value_terms(g)) add_terms(v, cod.differential(m), c);
    for (const auto& [m, c] : dom.differential(g)) add_terms(v, theta.apply(m), sign * c);
    if (!v.empty()) values.emplace(g, Element(theta.codomain(), std::move(v)));
  }
  return Derivation::from_values(theta.domain(), theta.codomain(), theta.degree() + 1, values);
}

Derivation lie_bracket(const Derivation& theta, const Derivation& rho) {
  if (!theta.is_endomorphism() || !rho.is_endomorphism())
    throw PresentationMismatch("lie_bracket needs derivations whose codomain is the domain algebra");
  if (!theta.domain()->same_generators(*rho.domain()))
    throw PresentationMismatch("lie_bracket of derivations on different algebras");
  const int deg = theta.degree() + rho.degree();
  const Rational sign = ((theta.degree() * rho.degree()) & 1) ? Rational(1) : Rational(-1);
  std::map<std::size_t, Element> values;
  for (std::size_t g = 0; g < theta.domain()->size(); ++g) {
    Terms v;
    for (const auto& [m, c] : rho.value_terms(g)) add_terms(v, theta.apply(m), c);
    for (const auto& [m, c] : theta.value_terms(g)) add_terms(v, rho.apply(m), sign * c);
    if (!v.empty()) values.emplace(g, Element(theta.domain(), std::move(v)));
  }
  return Derivation::from_values(theta.domain(), theta.domain(), deg, values);
}

BarHom lambda_iso(const Derivation& theta) {
  BarHom f;
  f.degree = theta.degree() + 1;
  const Rational sign = (theta.degree() & 1) ? Rational(-1) : Rational(1);
  for (std::size_t g = 0; g < theta.domain()->size(); ++g) f.values.push_back(sign * theta.value(g));
  return f;
}

Derivation lambda_inverse(const BarHom& f, PresentationPtr algebra) {
  const int deg = f.degree - 1;
  const Rational sign = (deg & 1) ? Rational(-1) : Rational(1);
  std::map<std::size_t, Element> values;
  for (std::size_t g = 0; g < f.values.size(); ++g)
    if (!f.values[g].is_zero()) values.emplace(g, sign * f.values[g]);
  return Derivation::from_values(algebra, algebra, deg, values);
}

}  // namespace cartan
