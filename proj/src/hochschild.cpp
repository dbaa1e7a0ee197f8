#include "cartan/hochschild.hpp"

#include <algorithm>
#include <sstream>

namespace cartan {

namespace {

Rational sign_of(int parity) { return (parity & 1) ? Rational(-1) : Rational(1); }

}  // namespace

void Chain::add(const ChainWord& w, const Rational& c) {
  if (cartan::is_zero(c)) return;
  if (normalized_)
    for (const Monomial& a : w.tail)
      if (a.is_unit()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (cartan::is_zero(it->second)) terms_.erase(it);
  }
}

void Chain::add(const Chain& other, const Rational& scale) {
  if (!other.normalized_) normalized_ = false;
  if (cartan::is_zero(scale)) return;
  for (const auto& [w, c] : other.terms_) add(w, scale * c);
}

HochschildComplex::HochschildComplex(PresentationPtr algebra, bool normalized)
    : a_(std::move(algebra)), normalized_(normalized) {}

int HochschildComplex::degree(const ChainWord& w) const {
  int n = a_->degree(w.head);
  for (const Monomial& a : w.tail) n += a_->degree(a) - 1;
  return n;
}

int HochschildComplex::epsilon(const ChainWord& w, std::size_t i) const {
  int e = a_->degree(w.head);
  for (std::size_t j = 1; j < i; ++j) e += a_->degree(w.tail[j - 1]) - 1;
  return e;
}

std::string HochschildComplex::format(const ChainWord& w) const {
  std::string out = a_->format(w.head);
  if (w.tail.empty()) return out;
  out += "[";
  for (std::size_t i = 0; i < w.tail.size(); ++i) {
    if (i) out += "|";
    out += a_->format(w.tail[i]);
  }
  return out + "]";
}

std::string HochschildComplex::format(const Chain& c) const {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, x] : c.terms()) {
    if (!first) os << (sgn(x) < 0 ? " - " : " + ");
    else if (sgn(x) < 0) os << "-";
    first = false;
    const Rational ax = abs(x);
    if (ax != 1) os << to_string(ax) << "*";
    os << format(w);
  }
  return os.str();
}

template <class F>
Chain HochschildComplex::map_words(const Chain& c, F&& f) const {
  Chain out = zero();
  for (const auto& [w, x] : c.terms()) out.add(f(w), x);
  return out;
}

Chain HochschildComplex::d1_component(const ChainWord& w, std::size_t i) const {
  Chain out = zero();
  if (i == 0) {
    for (const auto& [m, c] : a_->differential(w.head)) out.add(ChainWord{m, w.tail}, c);
    return out;
  }
  const Rational sign = sign_of(epsilon(w, i) + 1);
  for (const auto& [m, c] : a_->differential(w.tail[i - 1])) {
    ChainWord v = w;
    v.tail[i - 1] = m;
    out.add(v, sign * c);
  }
  return out;
}

Chain HochschildComplex::d2_component(const ChainWord& w, std::size_t i) const {
  Chain out = zero();
  const std::size_t n = w.length();
  if (n == 0) return out;
  if (i == 0) {
    auto [sg, m] = a_->multiply(w.head, w.tail[0]);
    if (sg == 0) return out;
    ChainWord v{m, std::vector<Monomial>(w.tail.begin() + 1, w.tail.end())};
    out.add(v, sign_of(a_->degree(w.head) + (sg < 0)));
    return out;
  }
  if (i < n) {
    auto [sg, m] = a_->multiply(w.tail[i - 1], w.tail[i]);
    if (sg == 0) return out;
    ChainWord v = w;
    v.tail[i - 1] = m;
    v.tail.erase(v.tail.begin() + static_cast<std::ptrdiff_t>(i));
    out.add(v, sign_of(epsilon(w, i + 1) + (sg < 0)));
    return out;
  }
  const Monomial& last = w.tail[n - 1];
  auto [sg, m] = a_->multiply(last, w.head);
  if (sg == 0) return out;
  ChainWord v{m, std::vector<Monomial>(w.tail.begin(), w.tail.end() - 1)};
  out.add(v, sign_of(epsilon(w, n) * (a_->degree(last) - 1) + 1 + (sg < 0)));
  return out;
}

Chain HochschildComplex::word_d1(const ChainWord& w) const {
  Chain out = zero();
  for (std::size_t i = 0; i <= w.length(); ++i) out += d1_component(w, i);
  return out;
}

Chain HochschildComplex::word_d2(const ChainWord& w) const {
  Chain out = zero();
  if (w.length() == 0) return out;
  for (std::size_t i = 0; i <= w.length(); ++i) out += d2_component(w, i);
  return out;
}

Chain HochschildComplex::d1(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) { return word_d1(w); });
}
Chain HochschildComplex::d2(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) { return word_d2(w); });
}
Chain HochschildComplex::d(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) { return word_d1(w) + word_d2(w); });
}

std::pair<int, ChainWord> HochschildComplex::t(const ChainWord& w) const {
  const std::size_t n = w.length();
  if (n == 0) return {1, w};
  const int s_last = a_->degree(w.tail[n - 1]) - 1;
  ChainWord v;
  v.head = w.tail[n - 1];
  v.tail.reserve(n);
  v.tail.push_back(w.head);
  v.tail.insert(v.tail.end(), w.tail.begin(), w.tail.end() - 1);
  return {(s_last * (epsilon(w, n) + 1)) & 1 ? -1 : 1, std::move(v)};
}

Chain HochschildComplex::t(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    auto [sg, v] = t(w);
    return single(v, Rational(sg));
  });
}

Chain HochschildComplex::s(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    ChainWord v{a_->unit(), {}};
    v.tail.push_back(w.head);
    v.tail.insert(v.tail.end(), w.tail.begin(), w.tail.end());
    return single(v);
  });
}

Chain HochschildComplex::B(const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    Chain out = zero();
    ChainWord raw = w;
    int sign = 1;
    for (std::size_t k = 0; k <= w.length(); ++k) {
      ChainWord v{a_->unit(), {}};
      v.tail.push_back(raw.head);
      v.tail.insert(v.tail.end(), raw.tail.begin(), raw.tail.end());
      out.add(v, Rational(sign));
      auto [sg, next] = t(raw);
      sign *= sg;
      raw = std::move(next);
    }
    return out;
  });
}

Chain HochschildComplex::word_L(const Derivation& theta, const ChainWord& w, std::size_t i) const {
  Chain out = zero();
  if (i == 0) {
    for (const auto& [m, c] : theta.apply(w.head)) out.add(ChainWord{m, w.tail}, c);
    return out;
  }
  if (i > w.length()) return out;
  const Rational sign = sign_of(theta.degree() * (epsilon(w, i) + 1));
  for (const auto& [m, c] : theta.apply(w.tail[i - 1])) {
    ChainWord v = w;
    v.tail[i - 1] = m;
    out.add(v, sign * c);
  }
  return out;
}

Chain HochschildComplex::L_component(const Derivation& theta, const Chain& c, std::size_t i) const {
  return map_words(c, [&](const ChainWord& w) { return word_L(theta, w, i); });
}

Chain HochschildComplex::L(const Derivation& theta, const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    Chain out = zero();
    for (std::size_t i = 0; i <= w.length(); ++i) out += word_L(theta, w, i);
    return out;
  });
}

Chain HochschildComplex::e(const Derivation& theta, const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    Chain out = zero();
    if (w.length() == 0) return out;
    const int h = a_->degree(w.head);
    const int p = theta.degree();
    const std::vector<Monomial> rest(w.tail.begin() + 1, w.tail.end());
    for (const auto& [m, x] : theta.apply(w.tail[0])) {
      auto [sg, prod] = a_->multiply(w.head, m);
      if (sg == 0) continue;
      out.add(ChainWord{prod, rest}, sign_of(p * h + p + h + (sg < 0)) * x);
    }
    return out;
  });
}

Chain HochschildComplex::S(const Derivation& theta, const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    Chain out = zero();
    const std::size_t n = w.length();
    for (std::size_t j = 1; j <= n; ++j) {
      const Chain lifted = word_L(theta, w, j);
      for (const auto& [u, x] : lifted.terms()) {
        ChainWord raw = u;
        int sign = 1;
        for (std::size_t k = 0; k + j <= n; ++k) {
          ChainWord v{a_->unit(), {}};
          v.tail.push_back(raw.head);
          v.tail.insert(v.tail.end(), raw.tail.begin(), raw.tail.end());
          out.add(v, Rational(sign) * x);
          auto [sg, next] = t(raw);
          sign *= sg;
          raw = std::move(next);
        }
      }
    }
    return out;
  });
}

HochschildCochain HochschildComplex::e_prime(const Derivation& theta) const {
  HochschildCochain f;
  f.arity = 1;
  PresentationPtr a = a_;
  f.value = [a, theta](const Monomial& a0, const std::vector<Monomial>& mid, const Monomial& last) {
    Terms out;
    const int h = a->degree(a0);
    const int p = theta.degree();
    for (const auto& [m, x] : theta.apply(mid.at(0))) {
      auto [s1, left] = a->multiply(a0, m);
      if (s1 == 0) continue;
      auto [s2, full] = a->multiply(left, last);
      if (s2 == 0) continue;
      add_term(out, full, sign_of(p * h + p + h + (s1 * s2 < 0)) * x);
    }
    return out;
  };
  return f;
}

Chain HochschildComplex::cap(const HochschildCochain& f, const Chain& c) const {
  return map_words(c, [&](const ChainWord& w) {
    Chain out = zero();
    if (w.length() < f.arity) return out;
    const std::vector<Monomial> mid(w.tail.begin(), w.tail.begin() + static_cast<std::ptrdiff_t>(f.arity));
    const std::vector<Monomial> rest(w.tail.begin() + static_cast<std::ptrdiff_t>(f.arity), w.tail.end());
    for (const auto& [m, x] : f.value(w.head, mid, a_->unit())) out.add(ChainWord{m, rest}, x);
    return out;
  });
}

Chain HochschildComplex::shuffle(const Chain& x, const Chain& y) const {
  Chain out = zero();
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      auto [sg, head] = a_->multiply(u.head, v.head);
      if (sg == 0) continue;
      std::vector<int> su, sv;
      int total_u = 0;
      for (const Monomial& m : u.tail) total_u += (su.emplace_back(a_->degree(m) - 1));
      for (const Monomial& m : v.tail) sv.push_back(a_->degree(m) - 1);
      const int base_parity = a_->degree(v.head) * total_u + (sg < 0);
      // remaining_u[i] = sum of s-degrees of u.tail[i..]
      std::vector<int> remaining_u(su.size() + 1, 0);
      for (std::size_t i = su.size(); i-- > 0;) remaining_u[i] = remaining_u[i + 1] + su[i];
      std::vector<Monomial> tail;
      auto rec = [&](auto&& self, std::size_t i, std::size_t j, int parity) -> void {
        if (i == u.tail.size() && j == v.tail.size()) {
          out.add(ChainWord{head, tail}, sign_of(parity) * cu * cv);
          return;
        }
        if (i < u.tail.size()) {
          tail.push_back(u.tail[i]);
          self(self, i + 1, j, parity);
          tail.pop_back();
        }
        if (j < v.tail.size()) {
          tail.push_back(v.tail[j]);
          self(self, i, j + 1, parity + sv[j] * remaining_u[i]);
          tail.pop_back();
        }
      };
      rec(rec, 0, 0, base_parity);
    }
  }
  return out;
}

std::vector<ChainWord> HochschildComplex::basis(int n) const {
  for (const Generator& g : a_->generators())
    if (g.degree < 2) throw SimplyConnectedError("Hochschild bases need every generator in degree >= 2");
  std::vector<ChainWord> out;
  if (n < 0) return out;
  std::vector<Monomial> tail;
  for (int h = 0; h <= n; ++h) {
    for (const Monomial& head : a_->basis(h)) {
      auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
          out.push_back(ChainWord{head, tail});
          return;
        }
        for (int r = 1; r <= remaining; ++r)
          for (const Monomial& m : a_->basis(r + 1)) {
            tail.push_back(m);
            self(self, remaining - r);
            tail.pop_back();
          }
      };
      rec(rec, n - h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisComplex<ChainWord> HochschildComplex::complex() const {
  BasisComplex<ChainWord> cx;
  HochschildComplex self = *this;
  cx.basis = [self](int n) { return self.basis(n); };
  cx.differential = [self](const ChainWord& w) { return self.d(Chain(w)).terms(); };
  cx.label = [self](const ChainWord& w) { return self.format(w); };
  return cx;
}

Element theta_map(const LoopModel& model, const Chain& c) {
  const PresentationPtr& ext = model.extended();
  Element out(ext);
  for (const auto& [w, x] : c.terms()) {
    Element term(ext, model.embed(w.head));
    Rational factorial = 1;
    for (std::size_t i = 0; i < w.tail.size(); ++i) {
      factorial *= static_cast<long>(i + 1);
      term = term * model.s(Element(ext, model.embed(w.tail[i])));
    }
    out += (x / factorial) * term;
  }
  return out;
}

Chain theta_prime(const LoopModel& model, const HochschildComplex& hc, const Element& w) {
  Chain out;
  const Presentation& base = *model.base();
  for (const auto& [m, x] : w.terms()) {
    auto [a, word] = model.split(m);
    Chain acc(ChainWord{a, {}});
    for (std::size_t i = 0; i < model.rank(); ++i)
      for (int e = 0; e < word[model.bar(i)]; ++e)
        acc = hc.shuffle(acc, Chain(ChainWord{base.unit(), {base.generator_monomial(i)}}));
    out.add(acc, x);
  }
  return out;
}

}  // namespace cartan
