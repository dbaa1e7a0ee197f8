#include "cartan/cyclic.hpp"

namespace cartan {

CyclicElement cyclic_add(const CyclicElement& a, const CyclicElement& b, const Rational& scale) {
  CyclicElement out = a;
  for (const auto& [k, x] : b) {
    Rational& slot = out[k];
    slot += scale * x;
    if (is_zero(slot)) out.erase(k);
  }
  return out;
}

CyclicElement lift(const Element& x, int power) {
  CyclicElement out;
  for (const auto& [m, c] : x.terms()) out.emplace(CyclicKey{power, m}, c);
  return out;
}

std::string format_cyclic(const LoopModel& model, const CyclicElement& z) {
  if (z.empty()) return "0";
  std::map<int, Terms> by_power;
  for (const auto& [k, x] : z) by_power[k.power].emplace(k.m, x);
  std::string out;
  for (const auto& [p, t] : by_power) {
    if (!out.empty()) out += " + ";
    const std::string body = "(" + format_terms(*model.extended(), t) + ")";
    out += p == 0 ? body : (p == 1 ? "u*" : "u^" + std::to_string(p) + "*") + body;
  }
  return out;
}

int cyclic_degree(const LoopModel& model, const CyclicKey& k) { return model.extended()->degree(k.m) + 2 * k.power; }

BasisComplex<CyclicKey> cyclic_complex(const LoopModel& model) {
  BasisComplex<CyclicKey> cx;
  cx.basis = [model](int n) {
    std::vector<CyclicKey> out;
    for (int k = 0; 2 * k <= n; ++k)
      for (const Monomial& m : model.basis(n - 2 * k)) out.push_back({k, m});
    return out;
  };
  cx.differential = [model](const CyclicKey& key) {
    CyclicElement z;
    z.emplace(key, Rational(1));
    return d_u(model, z);
  };
  cx.label = [model](const CyclicKey& key) {
    CyclicElement z;
    z.emplace(key, Rational(1));
    return format_cyclic(model, z);
  };
  return cx;
}

CyclicElement d_u(const LoopModel& model, const CyclicElement& z) {
  CyclicElement out;
  const Presentation& ext = *model.extended();
  for (const auto& [k, x] : z) {
    for (const auto& [m, c] : ext.differential(k.m)) out = cyclic_add(out, {{CyclicKey{k.power, m}, c}}, x);
    for (const auto& [m, c] : model.s().apply(k.m)) out = cyclic_add(out, {{CyclicKey{k.power + 1, m}, c}}, x);
  }
  return out;
}

DegreeCohomology<CyclicKey> cyclic_cohomology(const LoopModel& model, int n) {
  return degree_cohomology(cyclic_complex(model), n);
}

namespace {

Operator<CyclicElement> coefficientwise(const Derivation& op, int power_shift) {
  return {op.degree() + 2 * power_shift, [op, power_shift](const CyclicElement& z) {
            CyclicElement out;
            for (const auto& [k, x] : z) {
              if (k.power + power_shift < 0) continue;
              for (const auto& [m, c] : op.apply(k.m))
                out = cyclic_add(out, {{CyclicKey{k.power + power_shift, m}, c}}, x);
            }
            return out;
          }};
}

}  // namespace

Operator<CyclicElement> cyclic_L_any(const LoopModel& model, const Derivation& theta) {
  return coefficientwise(op_L(model, theta), 0);
}

Operator<CyclicElement> cyclic_L(const LoopModel& model, const Derivation& theta) {
  if (!der_differential(theta).is_zero())
    throw NotACocycle("cyclic_L needs a cocycle; [d, theta] = " + der_differential(theta).to_string());
  return cyclic_L_any(model, theta);
}

Operator<CyclicElement> cyclic_homotopy(const LoopModel& model, const Derivation& theta) {
  return coefficientwise(op_e(model, theta), -1);
}

IdentityReport check_cyclic_cartan(const LoopModel& model, const Derivation& theta, int max_degree,
                                   const std::vector<Element>& samples) {
  IdentityReport report;
  const PresentationPtr& ext = model.extended();
  const Derivation dtheta = der_differential(theta);
  const Derivation e = op_e(model, theta);
  const Derivation e_d = op_e(model, dtheta);
  const Derivation L = op_L(model, theta);
  const Operator<Element> d_op{1, [&](const Element& x) { return model.d(x); }};
  const Operator<Element> s_op{-1, [&](const Element& x) { return model.s(x); }};
  const Operator<Element> e_op{e.degree(), [&](const Element& x) { return e.apply(x); }};
  const auto show = [](const Element& x) { return x.to_string(); };
  const std::string tag = " [theta = " + theta.to_string() + "]";

  std::vector<Element> inputs;
  for (std::size_t g = 0; g < ext->size(); ++g) inputs.push_back(Element::generator(ext, g));
  inputs.insert(inputs.end(), samples.begin(), samples.end());
  for (const Element& x : inputs) {
    report.record("[d,e] + e_dtheta = 0", commutator(d_op, e_op, x) + e_d.apply(x), Element(ext), x.to_string() + tag,
                  show);
    report.record("L = [s,e]", L.apply(x), commutator(s_op, e_op, x), x.to_string() + tag, show);
  }

  const Operator<CyclicElement> du{1, [&](const CyclicElement& z) { return d_u(model, z); }};
  const auto Lbar = cyclic_L_any(model, theta);
  const auto h = cyclic_homotopy(model, theta);
  const auto h_d = cyclic_homotopy(model, dtheta);
  const Rational sign = (theta.degree() & 1) ? Rational(-1) : Rational(1);
  const auto show_c = [&](const CyclicElement& z) { return format_cyclic(model, z); };
  const BasisComplex<CyclicKey> cx = cyclic_complex(model);
  for (int n = 0; n <= max_degree; ++n) {
    for (const CyclicKey& key : cx.basis(n)) {
      const CyclicElement z{{key, Rational(1)}};
      const std::string in = show_c(z) + tag;
      report.record("d_u^2 = 0", du(du(z)), CyclicElement{}, in, show_c);
      if (key.power < 1) continue;
      const CyclicElement lhs = cyclic_add({}, commutator(h, du, z), sign);
      const CyclicElement rhs = cyclic_add(Lbar(z), h_d(z), Rational(-1));
      report.record("(-1)^|theta| [u^-1 e, d_u] = Lbar - u^-1 e_dtheta", lhs, rhs, in, show_c);
    }
  }
  return report;
}

}  // namespace cartan
