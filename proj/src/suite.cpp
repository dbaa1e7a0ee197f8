#include "cartan/suite.hpp"

#include "cartan/cyclic.hpp"
#include "cartan/wiring.hpp"

#include <algorithm>

namespace cartan {

namespace {

Rational sign_of(long long k) { return (k & 1) ? Rational(-1) : Rational(1); }

template <class F>
Chain per_word(const Chain& c, F&& f) {
  Chain out;
  for (const auto& [w, x] : c.terms()) out.add(f(w), x);
  return out;
}

}  // namespace

void check_hochschild_relations(const HochschildComplex& hc, const Derivation& theta, const Derivation& rho,
                                const std::vector<Chain>& inputs, IdentityReport& report) {
  const int p = theta.degree();
  const int q = rho.degree();
  const Derivation dtheta = der_differential(theta);
  const auto show = [&](const Chain& c) { return hc.format(c); };
  const auto e = [&](const Chain& c) { return hc.e(theta, c); };
  const auto d1i = [&](std::size_t i) {
    return [&, i](const Chain& c) {
      return per_word(c, [&](const ChainWord& w) { return i <= w.length() ? hc.d1_component(w, i) : Chain(); });
    };
  };
  const auto d2i = [&](std::size_t i) {
    return [&, i](const Chain& c) {
      return per_word(c, [&](const ChainWord& w) {
        return w.length() >= 1 && i <= w.length() ? hc.d2_component(w, i) : Chain();
      });
    };
  };
  const auto L = [&](const Derivation& t, std::size_t i) { return [&, i](const Chain& c) { return hc.L_component(t, c, i); }; };
  const std::string tag = " [theta = " + theta.to_string() + ", rho = " + rho.to_string() + "]";

  for (const Chain& input : inputs) {
    for (const auto& [w, unused] : input.terms()) {
      (void)unused;
      const Chain c(w);
      const std::size_t n = w.length();
      const std::string in = hc.format(c) + tag;
      const Rational flip = sign_of(p + 1);

      if (n >= 1) report.record("e = d_{2,0} L_1", e(c), d2i(0)(L(theta, 1)(c)), in, show);

      if (n >= 1) {
        report.record("d_{1,0} e", d1i(0)(e(c)), flip * (e(d1i(0)(c)) + e(d1i(1)(c))) - hc.e(dtheta, c), in, show);
        report.record("d_{2,0} e", d2i(0)(e(c)), flip * (e(d2i(0)(c)) + e(d2i(1)(c))), in, show);
      }
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        report.record("d_{1,i} e", d1i(i)(e(c)), flip * e(d1i(i + 1)(c)), in, show);
        report.record("d_{2,i} e", d2i(i)(e(c)), flip * e(d2i(i + 1)(c)), in, show);
      }

      for (std::size_t i = 1; i <= n + 1; ++i)
        report.record("L_i s", L(theta, i)(hc.s(c)), sign_of(p) * hc.s(L(theta, i - 1)(c)), in, show);

      if (n >= 1) {
        const Chain d20 = d2i(0)(c);
        report.record("L_0 d_{2,0}", L(theta, 0)(d20), sign_of(p) * d2i(0)(L(theta, 0)(c) + L(theta, 1)(c)), in, show);
        for (std::size_t i = 1; i < n; ++i)
          report.record("L_i d_{2,0}", L(theta, i)(d20), sign_of(p) * d2i(0)(L(theta, i + 1)(c)), in, show);
      }

      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
          if (i == j) {
            // theta(rho(a_i)) in slot i with the combined sign
            Chain direct = hc.zero();
            const Monomial& slot = i == 0 ? w.head : w.tail[i - 1];
            const Element inner = rho.apply(Element(hc.algebra(), slot));
            const Element outer = theta.apply(inner);
            const Rational sg = i == 0 ? Rational(1) : sign_of(static_cast<long long>(p + q) * (hc.epsilon(w, i) + 1));
            for (const auto& [m, x] : outer.terms()) {
              ChainWord v = w;
              (i == 0 ? v.head : v.tail[i - 1]) = m;
              direct.add(v, sg * x);
            }
            report.record("L_i L_i = L_{theta rho, i}", L(theta, i)(L(rho, i)(c)), direct, in, show);
          } else {
            report.record("L_i L_j = +- L_j L_i", L(theta, i)(L(rho, j)(c)),
                          sign_of(static_cast<long long>(p) * q) * L(rho, j)(L(theta, i)(c)), in, show);
          }
        }

      if (n >= 1) {
        report.record("L_0 t = t L_n", L(theta, 0)(hc.t(c)), hc.t(L(theta, n)(c)), in, show);
        for (std::size_t i = 1; i <= n; ++i)
          report.record("L_i t = t L_{i-1}", L(theta, i)(hc.t(c)), hc.t(L(theta, i - 1)(c)), in, show);
      }

      const Operator<Chain> d1{1, [&](const Chain& x) { return hc.d1(x); }};
      const Operator<Chain> S{p - 1, [&](const Chain& x) { return hc.S(theta, x); }};
      report.record("[d_1, S] + S_dtheta = 0", commutator(d1, S, c) + hc.S(dtheta, c), hc.zero(), in, show);
    }
  }
}

void check_comparison(const LoopModel& model, const HochschildComplex& hc, const Derivation& theta,
                      const std::vector<Chain>& chains, const std::vector<Element>& elements, IdentityReport& report) {
  const auto show = [](const Element& x) { return x.to_string(); };
  const Derivation L = op_L(model, theta);
  const Derivation e = op_e(model, theta);
  const std::string tag = " [theta = " + theta.to_string() + "]";
  for (const Chain& c : chains) {
    const std::string in = hc.format(c) + tag;
    const Element tc = theta_map(model, c);
    report.record("Theta d = d Theta", theta_map(model, hc.d(c)), model.d(tc), in, show);
    report.record("Theta B = s Theta", theta_map(model, hc.B(c)), model.s(tc), in, show);
    report.record("Theta L = L Theta", theta_map(model, hc.L(theta, c)), L.apply(tc), in, show);
  }
  for (const Element& x : elements) {
    const std::string in = x.to_string() + tag;
    const Chain lifted = theta_prime(model, hc, x);
    report.record("Theta Theta' = id", theta_map(model, lifted), x, in, show);
    report.record("Theta e Theta' = e", theta_map(model, hc.e(theta, lifted)), e.apply(x), in, show);
  }
}

std::size_t SuiteResult::evaluations() const {
  std::size_t n = 0;
  for (const IdentityReport* r : {&loop, &hochschild, &comparison, &cyclic})
    for (const auto& [k, v] : r->checks) n += v;
  return n;
}

SuiteResult run_identity_suite(const PresentationPtr& p, const SuiteOptions& options,
                               const std::vector<Derivation>& extra_derivations) {
  SuiteResult out;
  Sampler rng(options.seed);
  const LoopModel model = LoopModel::build(p);
  const HochschildComplex hc(p);
  const HochschildComplex raw(p, false);
  const auto lw = loop_wiring(model);
  const auto hw = hochschild_wiring(hc);
  const int top = p->max_generator_degree();
  const PresentationPtr& ext = model.extended();

  for (int trial = 0; trial < options.trials; ++trial) {
    const Derivation theta = rng.derivation_in_range(p, -top, 2);
    const Derivation rho = rng.derivation_in_range(p, -top, 2);
    std::vector<Element> xs;
    std::vector<Chain> cs;
    for (int i = 0; i < options.samples; ++i) {
      xs.push_back(rng.element_in_range(ext, 0, options.max_degree));
      cs.push_back(rng.chain(hc, options.max_degree));
    }
    check_pre_cartan(lw, theta, xs, out.loop);
    check_cartan(lw, theta, rho, xs, out.loop);
    check_mixed_complex(lw.d, lw.B, xs, lw.show, out.loop);

    check_pre_cartan(hw, theta, cs, out.hochschild);
    check_cartan(hw, theta, rho, cs, out.hochschild);
    check_mixed_complex(hw.d, hw.B, cs, hw.show, out.hochschild);
    check_hochschild_relations(raw, theta, rho, cs, out.hochschild);

    check_comparison(model, hc, theta, cs, xs, out.comparison);
  }

  std::vector<Derivation> cyc = extra_derivations;
  for (int i = 0; i < options.cyclic_trials; ++i) cyc.push_back(rng.derivation_in_range(p, -top, 2));
  for (const Derivation& theta : cyc) {
    std::vector<Element> xs;
    for (int i = 0; i < options.samples; ++i) xs.push_back(rng.element_in_range(ext, 0, options.max_degree));
    out.cyclic.merge(check_cyclic_cartan(model, theta, options.cyclic_degree, xs));
  }
  return out;
}

}  // namespace cartan
