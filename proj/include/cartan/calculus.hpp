#pragma once

// Homotopy (pre-)Cartan calculus identities as checkable predicates on sampled inputs.
// Operators act on a vector type Vec supporting +, -, scalar *, == and a zero Vec{}.

#include "cartan/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cartan {

template <class Vec>
struct Operator {
  int degree = 0;
  std::function<Vec(const Vec&)> apply;  // empty means the zero operator

  Vec operator()(const Vec& x) const { return apply ? apply(x) : Vec{}; }
};

/// [f, g](x) = f(g(x)) - (-1)^{|f||g|} g(f(x)).
template <class Vec>
Vec commutator(const Operator<Vec>& f, const Operator<Vec>& g, const Vec& x) {
  const Rational sign = ((f.degree * g.degree) & 1) ? Rational(1) : Rational(-1);
  return f(g(x)) + sign * g(f(x));
}

/// The data (g, H, e, L, S, T) over a mixed complex (C, d, B), with H = End(C).
template <class G, class Vec>
struct CalculusWiring {
  std::function<int(const G&)> degree;
  std::function<G(const G&)> delta;
  std::function<G(const G&, const G&)> bracket;
  Operator<Vec> d, B;
  std::function<Operator<Vec>(const G&)> e, L, S;               // S may be empty
  std::function<Operator<Vec>(const G&, const G&)> T;           // may be empty
  std::function<std::string(const Vec&)> show;
  std::function<std::string(const G&)> show_g;

  Operator<Vec> S_of(const G& t) const { return S ? S(t) : Operator<Vec>{degree(t) - 1, {}}; }
  Operator<Vec> T_of(const G& a, const G& b) const {
    return T ? T(a, b) : Operator<Vec>{degree(a) + degree(b), {}};
  }
};

struct IdentityFailure {
  std::string identity;
  std::string witness;
};

struct IdentityReport {
  std::map<std::string, std::size_t> checks;  // identity -> number of evaluations
  std::vector<IdentityFailure> failures;

  bool ok() const { return failures.empty(); }
  void merge(const IdentityReport& other) {
    for (const auto& [k, n] : other.checks) checks[k] += n;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  template <class Vec, class Show>
  void record(const std::string& name, const Vec& lhs, const Vec& rhs, const std::string& input, Show&& show) {
    ++checks[name];
    if (!(lhs == rhs))
      failures.push_back({name, "input " + input + ": lhs " + show(lhs) + " != rhs " + show(rhs)});
  }
};

/// The three equalities of a homotopy pre-Cartan calculus, for one theta and sampled inputs.
template <class G, class Vec>
void check_pre_cartan(const CalculusWiring<G, Vec>& w, const G& theta, const std::vector<Vec>& inputs,
                      IdentityReport& report) {
  const G dtheta = w.delta(theta);
  const auto e = w.e(theta);
  const auto L = w.L(theta);
  const auto S = w.S_of(theta);
  const auto S_d = w.S_of(dtheta);
  const auto e_d = w.e(dtheta);
  const std::string tag = " [theta = " + w.show_g(theta) + "]";
  for (const Vec& x : inputs) {
    const std::string in = w.show(x) + tag;
    report.record("L = [B,e] + [d,S] + S_dtheta", L(x), commutator(w.B, e, x) + commutator(w.d, S, x) + S_d(x), in,
                  w.show);
    report.record("[d,e] + e_dtheta = 0", commutator(w.d, e, x) + e_d(x), Vec{}, in, w.show);
    report.record("[B,S] = 0", commutator(w.B, S, x), Vec{}, in, w.show);
  }
}

/// The two additional equalities of a homotopy Cartan calculus, for one pair (theta, rho).
template <class G, class Vec>
void check_cartan(const CalculusWiring<G, Vec>& w, const G& theta, const G& rho, const std::vector<Vec>& inputs,
                  IdentityReport& report) {
  const G br = w.bracket(theta, rho);
  const auto e = w.e(theta);
  const auto S = w.S_of(theta);
  const auto Lr = w.L(rho);
  const auto e_br = w.e(br);
  const auto S_br = w.S_of(br);
  const auto T = w.T_of(theta, rho);
  const auto T_dl = w.T_of(w.delta(theta), rho);
  const auto T_dr = w.T_of(theta, w.delta(rho));
  const Rational sign = (w.degree(theta) & 1) ? Rational(-1) : Rational(1);
  const std::string tag = " [theta = " + w.show_g(theta) + ", rho = " + w.show_g(rho) + "]";
  for (const Vec& x : inputs) {
    const std::string in = w.show(x) + tag;
    report.record("[e,L] - e_[theta,rho] = [d,T] - T_dtheta - (-1)^|theta| T_drho", commutator(e, Lr, x) - e_br(x),
                  commutator(w.d, T, x) - T_dl(x) - sign * T_dr(x), in, w.show);
    report.record("[S,L] - S_[theta,rho] = [B,T]", commutator(S, Lr, x) - S_br(x), commutator(w.B, T, x), in, w.show);
  }
}

/// d^2 = 0, B^2 = 0 and dB + Bd = 0 on the given inputs.
template <class Vec, class Show>
void check_mixed_complex(const Operator<Vec>& d, const Operator<Vec>& B, const std::vector<Vec>& inputs, Show&& show,
                         IdentityReport& report) {
  for (const Vec& x : inputs) {
    const std::string in = show(x);
    report.record("d^2 = 0", d(d(x)), Vec{}, in, show);
    report.record("B^2 = 0", B(B(x)), Vec{}, in, show);
    report.record("dB + Bd = 0", d(B(x)) + B(d(x)), Vec{}, in, show);
  }
}

}  // namespace cartan
