#include "cartan/der_complex.hpp"

#include <stdexcept>

namespace cartan {

BasisComplex<DerKey> der_complex(PresentationPtr domain, PresentationPtr codomain) {
  BasisComplex<DerKey> cx;
  cx.basis = [domain, codomain](int p) {
    std::vector<DerKey> out;
    for (std::size_t g = 0; g < domain->size(); ++g) {
      const int target = domain->generator(g).degree + p;
      if (target < 0) continue;
      for (const Monomial& m : codomain->basis(target)) out.push_back({g, m});
    }
    return out;
  };
  cx.differential = [domain, codomain](const DerKey& key) {
    const int p = codomain->degree(key.value) - domain->generator(key.gen).degree;
    Derivation theta = Derivation::from_values(domain, codomain, p, {{key.gen, Element(codomain, key.value)}});
    return der_keys(der_differential(theta));
  };
  cx.label = [domain, codomain](const DerKey& key) {
    return "(" + domain->generator(key.gen).name + "," + codomain->format(key.value) + ")";
  };
  return cx;
}

Combination<DerKey> der_keys(const Derivation& theta) {
  Combination<DerKey> out;
  for (std::size_t g = 0; g < theta.values().size(); ++g)
    for (const auto& [m, c] : theta.value_terms(g)) out.emplace(DerKey{g, m}, c);
  return out;
}

Derivation der_from_keys(PresentationPtr domain, PresentationPtr codomain, int degree, const Combination<DerKey>& c) {
  std::map<std::size_t, Element> values;
  for (const auto& [key, x] : c) {
    auto [it, inserted] = values.try_emplace(key.gen, codomain);
    it->second += Element(codomain, key.value, x);
  }
  return Derivation::from_values(domain, codomain, degree, values);
}

DerHomology der_homology(PresentationPtr algebra, int n) {
  if (n < 2) throw std::invalid_argument("der_homology needs n >= 2");
  DerHomology out;
  out.n = n;
  out.cohomology = degree_cohomology(der_complex(algebra, algebra), -n);
  for (std::size_t i = 0; i < out.cohomology.dimension(); ++i)
    out.representatives.push_back(der_from_keys(algebra, algebra, -n, out.cohomology.representative(i)));
  return out;
}

std::vector<DerHomology> der_homology_all(PresentationPtr algebra) {
  const int top = algebra->max_generator_degree();
  std::vector<DerHomology> out(top >= 2 ? static_cast<std::size_t>(top - 1) : 0);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = der_homology(algebra, static_cast<int>(i) + 2); });
  return out;
}

std::vector<Rational> der_class(const DerHomology& h, const Derivation& theta) {
  if (!theta.is_zero() && theta.degree() != -h.n)
    throw DegreeError("derivation of degree " + std::to_string(theta.degree()) + " is not in H_" +
                      std::to_string(h.n));
  return h.cohomology.class_of(der_keys(theta));
}

}  // namespace cartan
