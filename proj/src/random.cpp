#include "cartan/random.hpp"

#include "cartan/homology.hpp"

#include <algorithm>

namespace cartan {

namespace {

Terms pad(const Terms& t, std::size_t n) {
  Terms out;
  for (const auto& [m, c] : t) {
    std::vector<int> e = m.exponents();
    e.resize(n, 0);
    out.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::coefficient() {
  int a = 0;
  while (a == 0) a = uniform(-3, 3);
  Rational q(a, uniform(1, 2));
  q.canonicalize();
  return q;
}

Element Sampler::element(const PresentationPtr& p, int n, int max_terms) {
  Element out(p);
  if (n < 0) return out;
  const auto& basis = p->basis(n);
  if (basis.empty()) return out;
  const int terms = uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    const auto& m = basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
    out += Element(p, m, coefficient());
  }
  return out;
}

Element Sampler::element_in_range(const PresentationPtr& p, int lo, int hi, int max_terms) {
  std::vector<int> degrees;
  for (int n = std::max(lo, 0); n <= hi; ++n)
    if (!p->basis(n).empty()) degrees.push_back(n);
  if (degrees.empty()) return Element(p);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Element e = element(p, degrees[static_cast<std::size_t>(uniform(0, static_cast<int>(degrees.size()) - 1))], max_terms);
    if (!e.is_zero()) return e;
  }
  return Element::scalar(p, 1);
}

Derivation Sampler::derivation(const PresentationPtr& p, int degree) {
  std::map<std::size_t, Element> values;
  for (std::size_t g = 0; g < p->size(); ++g) {
    if (!coin(0.7)) continue;
    Element v = element(p, p->generator(g).degree + degree, 2);
    if (!v.is_zero()) values.emplace(g, std::move(v));
  }
  return Derivation::from_values(p, p, degree, values);
}

Derivation Sampler::derivation_in_range(const PresentationPtr& p, int lo, int hi) {
  std::vector<int> degrees;
  for (int k = lo; k <= hi; ++k)
    for (std::size_t g = 0; g < p->size(); ++g)
      if (p->generator(g).degree + k >= 0 && !p->basis(p->generator(g).degree + k).empty()) {
        degrees.push_back(k);
        break;
      }
  if (degrees.empty()) return Derivation(p, lo);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Derivation t = derivation(p, degrees[static_cast<std::size_t>(uniform(0, static_cast<int>(degrees.size()) - 1))]);
    if (!t.is_zero()) return t;
  }
  return derivation(p, degrees.front());
}

ChainWord Sampler::word(const PresentationPtr& p, int max_degree, std::size_t max_length) {
  const std::size_t len = static_cast<std::size_t>(uniform(0, static_cast<int>(max_length)));
  ChainWord w;
  int budget = max_degree;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<int> options;
    for (int r = 1; r <= budget; ++r)
      if (!p->basis(r + 1).empty()) options.push_back(r);
    if (options.empty()) break;
    const int r = options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))];
    const auto& b = p->basis(r + 1);
    w.tail.push_back(b[static_cast<std::size_t>(uniform(0, static_cast<int>(b.size()) - 1))]);
    budget -= r;
  }
  std::vector<int> heads;
  for (int h = 0; h <= budget; ++h)
    if (!p->basis(h).empty()) heads.push_back(h);
  const int h = heads[static_cast<std::size_t>(uniform(0, static_cast<int>(heads.size()) - 1))];
  const auto& b = p->basis(h);
  w.head = b[static_cast<std::size_t>(uniform(0, static_cast<int>(b.size()) - 1))];
  return w;
}

Chain Sampler::chain(const HochschildComplex& hc, int max_degree, std::size_t max_length, int max_terms) {
  Chain c;
  const int terms = uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) c.add(word(hc.algebra(), max_degree, max_length), coefficient());
  return c;
}

PresentationPtr Sampler::presentation(int max_gens, int max_degree) {
  const int count = uniform(1, max_gens);
  std::vector<int> degrees;
  for (int i = 0; i < count; ++i) degrees.push_back(uniform(2, max_degree));
  std::sort(degrees.begin(), degrees.end());
  std::vector<Generator> gens;
  std::vector<Terms> diff;
  for (int i = 0; i < count; ++i) {
    const int deg = degrees[static_cast<std::size_t>(i)];
    Terms dv;
    if (i > 0 && coin(0.8)) {
      std::vector<Terms> sub_diff;
      for (const Terms& t : diff) sub_diff.push_back(pad(t, gens.size()));
      PresentationPtr sub = Presentation::create(gens, sub_diff);
      const auto& src = sub->basis(deg + 1);
      const auto& tgt = sub->basis(deg + 2);
      const SparseMatrix m = assemble_matrix(src, tgt, [&](const Monomial& x) { return sub->differential(x); });
      const ColumnReduction red = column_reduce(m);
      for (const SparseVector& z : red.kernel) {
        if (!coin(0.6)) continue;
        const Rational c = coefficient();
        for (const auto& [j, x] : z) add_term(dv, src[j], c * x);
      }
      // keep d decomposable
      for (auto it = dv.begin(); it != dv.end();) it = it->first.length() == 1 ? dv.erase(it) : std::next(it);
      if (!dv.empty()) {
        Terms check;
        for (const auto& [mm, c] : dv) add_terms(check, sub->differential(mm), c);
        if (!check.empty()) dv.clear();
      }
    }
    std::string name = "v" + std::to_string(i + 1);
    gens.push_back({name, deg});
    diff.push_back(std::move(dv));
  }
  for (auto& t : diff) t = pad(t, gens.size());
  return Presentation::create(std::move(gens), std::move(diff));
}

}  // namespace cartan
