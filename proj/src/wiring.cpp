#include "cartan/wiring.hpp"

namespace cartan {

namespace {

template <class Vec>
void common(CalculusWiring<Derivation, Vec>& w) {
  w.degree = [](const Derivation& t) { return t.degree(); };
  w.delta = [](const Derivation& t) { return der_differential(t); };
  w.bracket = [](const Derivation& a, const Derivation& b) { return lie_bracket(a, b); };
  w.show_g = [](const Derivation& t) { return t.to_string(); };
}

}  // namespace

CalculusWiring<Derivation, Element> loop_wiring(const LoopModel& model) {
  CalculusWiring<Derivation, Element> w;
  common(w);
  w.d = {1, [model](const Element& x) { return model.d(x); }};
  w.B = {-1, [model](const Element& x) { return model.s(x); }};
  w.e = [model](const Derivation& t) {
    const Derivation e = op_e(model, t);
    return Operator<Element>{e.degree(), [e](const Element& x) { return e.apply(x); }};
  };
  w.L = [model](const Derivation& t) {
    const Derivation L = op_L(model, t);
    return Operator<Element>{L.degree(), [L](const Element& x) { return L.apply(x); }};
  };
  w.show = [](const Element& x) { return x.to_string(); };
  return w;
}

CalculusWiring<Derivation, Chain> hochschild_wiring(const HochschildComplex& hc) {
  CalculusWiring<Derivation, Chain> w;
  common(w);
  w.d = {1, [hc](const Chain& c) { return hc.d(c); }};
  w.B = {-1, [hc](const Chain& c) { return hc.B(c); }};
  w.e = [hc](const Derivation& t) {
    return Operator<Chain>{t.degree() + 1, [hc, t](const Chain& c) { return hc.e(t, c); }};
  };
  w.L = [hc](const Derivation& t) {
    return Operator<Chain>{t.degree(), [hc, t](const Chain& c) { return hc.L(t, c); }};
  };
  w.S = [hc](const Derivation& t) {
    return Operator<Chain>{t.degree() - 1, [hc, t](const Chain& c) { return hc.S(t, c); }};
  };
  w.show = [hc](const Chain& c) { return hc.format(c); };
  return w;
}

}  // namespace cartan
