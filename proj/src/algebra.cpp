#include "cartan/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cartan {

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::length() const {
  int n = 0;
  for (int e : exps_) n += e;
  return n;
}

void add_term(Terms& terms, const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

void add_terms(Terms& terms, const Terms& other, const Rational& scale) {
  if (is_zero(scale)) return;
  for (const auto& [m, c] : other) add_term(terms, m, scale * c);
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(Token, std::vector<Generator> gens, std::vector<Terms> differential)
    : gens_(std::move(gens)), diff_(std::move(differential)) {}

PresentationPtr Presentation::create(std::vector<Generator> gens) {
  std::vector<Terms> zero(gens.size());
  return create(std::move(gens), std::move(zero));
}

PresentationPtr Presentation::create(std::vector<Generator> gens, std::vector<Terms> differential) {
  if (differential.size() != gens.size())
    throw InvalidPresentation("differential must be given for every generator");
  std::set<std::string> names;
  for (const auto& g : gens) {
    if (g.degree < 1)
      throw InvalidPresentation("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                                "; degrees must be >= 1");
    if (!names.insert(g.name).second) throw InvalidPresentation("duplicate generator '" + g.name + "'");
  }
  auto p = std::make_shared<Presentation>(Token{}, std::move(gens), std::move(differential));
  for (std::size_t i = 0; i < p->size(); ++i) {
    for (const auto& [m, c] : p->diff_[i]) {
      if (m.size() != p->size()) throw InvalidPresentation("differential monomial has wrong arity");
      if (p->degree(m) != p->gens_[i].degree + 1)
        throw DegreeError("d " + p->gens_[i].name + " must have degree " +
                          std::to_string(p->gens_[i].degree + 1) + ", got term " + p->format(m) +
                          " of degree " + std::to_string(p->degree(m)));
    }
  }
  for (std::size_t i = 0; i < p->size(); ++i) {
    Terms dd;
    for (const auto& [m, c] : p->diff_[i]) add_terms(dd, p->differential(m), c);
    if (!dd.empty())
      throw InvalidPresentation("d^2 != 0 on generator '" + p->gens_[i].name +
                                "': d(d " + p->gens_[i].name + ") = " + format_terms(*p, dd));
  }
  return p;
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

int Presentation::max_generator_degree() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree);
  return m;
}

int Presentation::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
  return d;
}

Monomial Presentation::generator_monomial(std::size_t i, int exponent) const {
  Monomial m = unit();
  m.mutable_exponents()[i] = exponent;
  return m;
}

std::pair<int, Monomial> Presentation::multiply(const Monomial& a, const Monomial& b) const {
  const std::size_t n = gens_.size();
  int odd_in_a_above = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && gens_[i].odd()) ++odd_in_a_above;
  int parity = 0;
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = gens_[i].odd();
    if (odd && a[i] != 0) --odd_in_a_above;
    if (odd && b[i] != 0) {
      if (a[i] != 0) return {0, Monomial{}};
      parity += odd_in_a_above;
    }
    out[i] = a[i] + b[i];
  }
  return {(parity & 1) ? -1 : 1, Monomial(std::move(out))};
}

namespace {

void enumerate(const std::vector<Generator>& gens, std::size_t g, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (g == gens.size()) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  const int deg = gens[g].degree;
  const int max_exp = gens[g].odd() ? std::min(1, remaining / deg) : remaining / deg;
  for (int e = 0; e <= max_exp; ++e) {
    exps[g] = e;
    enumerate(gens, g + 1, remaining - e * deg, exps, out);
  }
  exps[g] = 0;
}

}  // namespace

const std::vector<Monomial>& Presentation::basis(int n) const {
  std::lock_guard lock(cache_mutex_);
  auto it = basis_cache_.find(n);
  if (it != basis_cache_.end()) return it->second;
  std::vector<Monomial> out;
  if (n >= 0) {
    std::vector<int> exps(gens_.size(), 0);
    enumerate(gens_, 0, n, exps, out);
    std::sort(out.begin(), out.end());
  }
  return basis_cache_.emplace(n, std::move(out)).first->second;
}

Terms Presentation::differential(const Monomial& m) const { return leibniz(*this, *this, 1, diff_, m); }

bool Presentation::has_zero_differential() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const Terms& t) { return t.empty(); });
}

bool Presentation::same_generators(const Presentation& other) const {
  return this == &other || gens_ == other.gens_;
}

bool Presentation::is_prefix_of(const Presentation& larger) const {
  if (this == &larger) return true;
  if (gens_.size() > larger.gens_.size()) return false;
  return std::equal(gens_.begin(), gens_.end(), larger.gens_.begin());
}

Monomial Presentation::embed(const Monomial& m, const Presentation& larger) const {
  if (this == &larger) return m;
  std::vector<int> exps = m.exponents();
  exps.resize(larger.size(), 0);
  return Monomial(std::move(exps));
}

std::string Presentation::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens_[i].name;
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Terms leibniz(const Presentation& domain, const Presentation& codomain, int degree,
              const std::vector<Terms>& values, const Monomial& m) {
  Terms out;
  const std::size_t n = domain.size();
  int degree_before = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const int e = m[g];
    if (e == 0) continue;
    const Terms& value = values[g];
    if (!value.empty()) {
      // prefix = generators before g together with g^{e-1}; suffix = generators after g
      std::vector<int> pre(codomain.size(), 0), post(codomain.size(), 0);
      for (std::size_t j = 0; j < g; ++j) pre[j] = m[j];
      pre[g] = e - 1;
      for (std::size_t j = g + 1; j < n; ++j) post[j] = m[j];
      const Monomial prefix(std::move(pre)), suffix(std::move(post));
      Rational scale(e);
      if ((degree & 1) && (degree_before & 1)) scale = -scale;
      for (const auto& [vm, vc] : value) {
        auto [s1, left] = codomain.multiply(prefix, vm);
        if (s1 == 0) continue;
        auto [s2, full] = codomain.multiply(left, suffix);
        if (s2 == 0) continue;
        add_term(out, full, s1 * s2 == 1 ? Rational(scale * vc) : Rational(-scale * vc));
      }
    }
    degree_before += e * domain.generator(g).degree;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(PresentationPtr p, Terms terms) : p_(std::move(p)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != p_->size()) throw PresentationMismatch("monomial arity does not match presentation");
    it = cartan::is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }
}

Element::Element(PresentationPtr p, const Monomial& m, const Rational& c) : p_(std::move(p)) {
  if (m.size() != p_->size()) throw PresentationMismatch("monomial arity does not match presentation");
  add_term(terms_, m, c);
}

Element Element::scalar(PresentationPtr p, const Rational& c) {
  Monomial one = p->unit();
  return Element(std::move(p), one, c);
}

Element Element::generator(PresentationPtr p, std::size_t i) {
  Monomial g = p->generator_monomial(i);
  return Element(std::move(p), g, 1);
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = p_->degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return p_->degree(t.first) == d; });
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  if (!is_homogeneous()) throw DegreeError("element " + to_string() + " is inhomogeneous");
  return p_->degree(terms_.begin()->first);
}

void Element::check_compatible(const Element& other) const {
  if (!p_ || !other.p_) return;
  if (!p_->same_generators(*other.p_)) throw PresentationMismatch("elements belong to different presentations");
}

Element& Element::operator+=(const Element& other) {
  if (!p_) p_ = other.p_;
  check_compatible(other);
  add_terms(terms_, other.terms_);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  if (!p_) p_ = other.p_;
  check_compatible(other);
  add_terms(terms_, other.terms_, Rational(-1));
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (cartan::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element multiply(const Element& a, const Element& b) {
  if (!a.presentation() || !b.presentation()) return Element(a.presentation() ? a.presentation() : b.presentation());
  if (!a.presentation()->same_generators(*b.presentation()))
    throw PresentationMismatch("cannot multiply elements of different presentations");
  const Presentation& p = *a.presentation();
  Terms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, m] = p.multiply(ma, mb);
      if (sign == 0) continue;
      add_term(out, m, Rational(sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb))));
    }
  return Element(a.presentation(), std::move(out));
}

Element power(const Element& a, int exponent) {
  if (exponent < 0) throw DegreeError("negative power");
  Element result = Element::scalar(a.presentation(), 1);
  for (int i = 0; i < exponent; ++i) result = multiply(result, a);
  return result;
}

Element differential(const Element& a) {
  Terms out;
  for (const auto& [m, c] : a.terms()) add_terms(out, a.presentation()->differential(m), c);
  return Element(a.presentation(), std::move(out));
}

std::vector<Monomial> basis_of_degree(const Presentation& p, int n) { return p.basis(n); }

std::string format_terms(const Presentation& p, const Terms& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << cartan::to_string(mag);
    } else {
      if (mag != 1) os << cartan::to_string(mag) << '*';
      os << p.format(m);
    }
  }
  return os.str();
}

std::string Element::to_string() const { return p_ ? format_terms(*p_, terms_) : std::string("0"); }

}  // namespace cartan
