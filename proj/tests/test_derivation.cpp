#include <doctest.h>

#include "cartan/der_complex.hpp"
#include "cartan/derivation.hpp"
#include "cartan/loop_model.hpp"
#include "cartan/random.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

Derivation der(const PresentationPtr& p, int degree, std::map<std::string, std::string> values) {
  std::map<std::size_t, Element> v;
  for (const auto& [g, text] : values) v.emplace(*p->find(g), parse_polynomial(p, text));
  return Derivation::from_values(p, p, degree, v);
}

Rational koszul(long long k) { return (k & 1) ? Rational(-1) : Rational(1); }

/// dim H of Der in cohomological degree p from a hand-built basis of (generator, monomial)
/// pairs and the formula [d, theta](v) = d(theta v) - (-1)^|theta| theta(dv).
std::size_t brute_der_dimension(const PresentationPtr& a, int p) {
  const auto basis = [&](int deg) {
    std::vector<Derivation> out;
    for (std::size_t g = 0; g < a->size(); ++g)
      for (const Monomial& m : oracle::enumerate_basis(*a, a->generator(g).degree + deg))
        out.push_back(Derivation::single(a, g, Element(a, m)));
    return out;
  };
  const auto bracket = [&](const Derivation& t) {
    std::vector<Element> values;
    for (std::size_t g = 0; g < a->size(); ++g) {
      const Element v = Element::generator(a, g);
      values.push_back(differential(t.apply(v)) - koszul(t.degree()) * t.apply(differential(v)));
    }
    return values;
  };
  const auto matrix = [&](int deg) {
    const auto src = basis(deg);
    std::vector<std::pair<std::size_t, Monomial>> rows;
    for (std::size_t g = 0; g < a->size(); ++g)
      for (const Monomial& m : oracle::enumerate_basis(*a, a->generator(g).degree + deg + 1)) rows.emplace_back(g, m);
    oracle::Dense out(rows.size(), std::vector<Rational>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
      const auto values = bracket(src[j]);
      for (std::size_t r = 0; r < rows.size(); ++r) out[r][j] = values[rows[r].first].coefficient(rows[r].second);
    }
    return std::pair{src.size(), out};
  };
  const auto [size, out] = matrix(p);
  const auto [unused, in] = matrix(p - 1);
  (void)unused;
  return size - oracle::dense_rank(out) - oracle::dense_rank(in);
}

}  // namespace

TEST_SUITE("derivation-algebra") {

TEST_CASE("evaluation by Leibniz") {
  const auto p = oracle::load("cp2").algebra;
  const Derivation t = der(p, -5, {{"y", "1"}});
  CHECK(t.apply(parse_polynomial(p, "x^2 y")) == parse_polynomial(p, "x^2"));
  CHECK(t.apply(Element::scalar(p, 1)).is_zero());
  const auto q = oracle::load("m11").algebra;
  CHECK(der(q, -5, {{"z", "1"}}).apply(parse_polynomial(q, "x y z")) == parse_polynomial(q, "x y"));
}

TEST_CASE("the differential of a derivation") {
  const auto p = oracle::load("cp2").algebra;
  CHECK(der_differential(der(p, -5, {{"y", "1"}})).is_zero());
  const Derivation d = Derivation::differential(p);
  CHECK(der_differential(d).is_zero());
  // [d, (x,y)](x) = d y = x^3 and [d, (x,y)](y) = (x,y)(x^3) = 3 x^2 y
  CHECK(der_differential(der(p, 3, {{"x", "y"}})) == der(p, 4, {{"x", "x^3"}, {"y", "3 x^2 y"}}));
}

TEST_CASE("bracket of (y,1) and (x,y)") {
  const auto p = oracle::load("cp2").algebra;
  const Derivation t = der(p, -5, {{"y", "1"}}), r = der(p, 3, {{"x", "y"}});
  // [t, r](x) = t(r(x)) - (-1)^{-15} r(t(x)) = t(y) = 1; [t, r](y) = t(0) + r(1) = 0
  CHECK(lie_bracket(t, r) == der(p, -2, {{"x", "1"}}));
}

TEST_CASE("bracket identities on random derivations") {
  Sampler rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = rng.presentation(4, 8);
    const int top = p->max_generator_degree();
    const Derivation a = rng.derivation_in_range(p, -top, 2), b = rng.derivation_in_range(p, -top, 2),
                     c = rng.derivation_in_range(p, -top, 2);
    const int x = a.degree(), y = b.degree(), z = c.degree();
    if (x % 2 == 0) CHECK(lie_bracket(a, a).is_zero());
    CHECK(lie_bracket(a, b) == -koszul(x * y) * lie_bracket(b, a));
    // graded Jacobi
    const Derivation j = koszul(x * z) * lie_bracket(a, lie_bracket(b, c)) + koszul(y * x) * lie_bracket(b, lie_bracket(c, a)) +
                         koszul(z * y) * lie_bracket(c, lie_bracket(a, b));
    CHECK(j.is_zero());
    CHECK(der_differential(der_differential(a)).is_zero());
    CHECK(der_differential(lie_bracket(a, b)) ==
          lie_bracket(der_differential(a), b) + koszul(x) * lie_bracket(a, der_differential(b)));
    // Leibniz on a product
    const Element u = rng.element_in_range(p, 0, 10), v = rng.element_in_range(p, 0, 10);
    if (!u.is_zero()) CHECK(a.apply(u * v) == a.apply(u) * v + koszul(x * *u.degree()) * (u * a.apply(v)));
  }
}

TEST_CASE("H(Der) of the worked examples") {
  const auto dims = [](const char* name) {
    std::map<int, std::size_t> out;
    for (const DerHomology& h : der_homology_all(oracle::load(name).algebra))
      if (h.cohomology.dimension()) out[h.n] = h.cohomology.dimension();
    return out;
  };
  CHECK(dims("cp2") == std::map<int, std::size_t>{{3, 1}, {5, 1}});
  CHECK(dims("m11") == std::map<int, std::size_t>{{5, 1}});
  CHECK(dims("m14") == std::map<int, std::size_t>{{5, 1}, {7, 1}});
  const auto p = oracle::load("cp2").algebra;
  const DerHomology h5 = der_homology(p, 5);
  CHECK(der_class(h5, der(p, -5, {{"y", "1"}})) == std::vector<Rational>{1});
  CHECK_THROWS_AS(der_homology(p, 1), std::invalid_argument);
}

TEST_CASE("H(Der) agrees with a brute-force computation") {
  std::vector<PresentationPtr> algebras;
  for (const char* name : {"cp2", "m11", "m14", "sphere3", "oddproj-3"}) algebras.push_back(oracle::load(name).algebra);
  Sampler rng(21);
  for (int i = 0; i < 8; ++i) algebras.push_back(rng.presentation(4, 8));
  for (const auto& p : algebras)
    for (const DerHomology& h : der_homology_all(p)) CHECK(h.cohomology.dimension() == brute_der_dimension(p, -h.n));
}

TEST_CASE("lambda") {
  const auto p = oracle::load("cp2").algebra;
  const BarHom f = lambda_iso(der(p, -5, {{"y", "1"}}));
  CHECK(f.degree == -4);
  CHECK(f.values[1] == Element::scalar(p, -1));
  CHECK(f.values[0].is_zero());
  const BarHom zero = lambda_iso(Derivation(p, 2));
  for (const Element& v : zero.values) CHECK(v.is_zero());
  Sampler rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto q = rng.presentation(5, 9);
    const Derivation t = rng.derivation_in_range(q, -q->max_generator_degree(), 3);
    CHECK(lambda_inverse(lambda_iso(t), q) == t);
  }
}

TEST_CASE("lambda induces an isomorphism H(Der) -> H(Hom(L_(1), AV))") {
  for (const char* name : {"cp2", "m11", "m14", "oddproj-3"}) {
    const LoopModel model = LoopModel::build(oracle::load(name).algebra);
    const auto hom = hom_complex(model, 1);
    for (const DerHomology& h : der_homology_all(model.base())) {
      const auto target = degree_cohomology(hom, 1 - h.n);
      CHECK_MESSAGE(target.dimension() == h.cohomology.dimension(), name << " n=" << h.n);
      SparseMatrix m(target.dimension(), h.representatives.size());
      for (std::size_t j = 0; j < h.representatives.size(); ++j)
        m.columns[j] = from_dense(target.class_of(lambda_hom(model, h.representatives[j])));
      CHECK(rank(m) == h.representatives.size());
    }
  }
}

TEST_CASE("lambda intertwines the differentials up to the sign -1") {
  Sampler rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = rng.presentation(4, 8);
    const LoopModel model = LoopModel::build(p);
    const auto hom = hom_complex(model, 1);
    const Derivation t = rng.derivation_in_range(p, -p->max_generator_degree(), 2);
    const Combination<HomKey> f = lambda_hom(model, t);
    Combination<HomKey> df;
    for (const auto& [k, c] : f) df = df + c * hom.differential(k);
    CHECK(lambda_hom(model, der_differential(t)) == Rational(-1) * df);
  }
}

}  // TEST_SUITE
