#include <doctest.h>

#include "cartan/hochschild.hpp"
#include "cartan/random.hpp"
#include "cartan/suite.hpp"
#include "cartan/wiring.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

struct Words {
  PresentationPtr p;
  Monomial m(const std::string& text) const { return parse_polynomial(p, text).terms().begin()->first; }
  ChainWord w(const std::string& head, std::vector<std::string> tail = {}) const {
    ChainWord out{m(head), {}};
    for (const auto& t : tail) out.tail.push_back(m(t));
    return out;
  }
};

}  // namespace

TEST_SUITE("hochschild") {

TEST_CASE("differential on short words") {
  const auto p = oracle::load("cp2").algebra;
  const HochschildComplex hc(p);
  const Words W{p};
  // d_1(1[y]) = -1[x^3]; the two d_2 terms y and -y cancel
  CHECK(hc.d(Chain(W.w("1", {"y"}))) == -Chain(W.w("1", {"x^3"})));
  CHECK(hc.d(Chain(W.w("y"))) == Chain(W.w("x^3")));
  CHECK(hc.d(Chain(W.w("x^2"))).is_zero());
  const auto s3 = Presentation::create({{"x", 3}});
  const HochschildComplex h3(s3);
  const Words S{s3};
  // d_{2,0} gives x[x], d_{2,1} gives 1[x^2] = 0, the wrap-around term gives -x[x]
  CHECK(h3.d(Chain(S.w("1", {"x", "x"}))).is_zero());
  CHECK(h3.d2_component(S.w("1", {"x", "x"}), 0) == Chain(S.w("x", {"x"})));
}

TEST_CASE("Connes B") {
  const auto s3 = Presentation::create({{"x", 3}});
  const HochschildComplex hc(s3);
  const Words W{s3};
  CHECK(hc.B(Chain(W.w("x"))) == Chain(W.w("1", {"x"})));
  CHECK(hc.B(Chain(W.w("x", {"x"}))) == Rational(2) * Chain(W.w("1", {"x", "x"})));
  CHECK(hc.B(Chain(W.w("1", {"x"}))).is_zero());
}

TEST_CASE("mixed complex axioms on every basis word") {
  for (const char* name : {"cp2", "m11", "oddproj-2"}) {
    const HochschildComplex hc(oracle::load(name).algebra);
    for (int n = 0; n <= 11; ++n)
      for (const ChainWord& w : hc.basis(n)) {
        const Chain c(w);
        CHECK(hc.d(hc.d(c)).is_zero());
        CHECK(hc.B(hc.B(c)).is_zero());
        CHECK((hc.d(hc.B(c)) + hc.B(hc.d(c))).is_zero());
      }
  }
}

TEST_CASE("operators on short words") {
  const auto p = oracle::load("cp2").algebra;
  const HochschildComplex hc(p);
  const Words W{p};
  const Derivation t = Derivation::single(p, 1, Element::scalar(p, 1));
  for (const char* a0 : {"1", "x", "y", "x^2 y"}) {
    CHECK(hc.e(t, Chain(W.w(a0))).is_zero());
    CHECK(hc.S(t, Chain(W.w(a0))).is_zero());
  }
  CHECK(hc.L(t, Chain(W.w("1", {"y"}))).is_zero());
  CHECK(hc.L(t, Chain(W.w("y", {"x"}))) == Chain(W.w("1", {"x"})));
}

TEST_CASE("e agrees with the cap product by e'") {
  Sampler rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = rng.presentation(4, 8);
    const HochschildComplex hc(p);
    const Derivation t = rng.derivation_in_range(p, -p->max_generator_degree(), 2);
    const HochschildCochain f = hc.e_prime(t);
    for (int i = 0; i < 3; ++i) {
      const Chain c = rng.chain(hc, 12);
      CHECK(hc.cap(f, c) == hc.e(t, c));
    }
  }
}

TEST_CASE("shuffle product") {
  const auto s3 = Presentation::create({{"x", 3}});
  const HochschildComplex hc(s3);
  const Words W{s3};
  const Chain one(W.w("1"));
  const Chain a(W.w("x", {"x"}));
  CHECK(hc.shuffle(a, one) == a);
  CHECK(hc.shuffle(Chain(W.w("1", {"x"})), Chain(W.w("1", {"x"}))) == Rational(2) * Chain(W.w("1", {"x", "x"})));
  const auto p = oracle::load("cp2").algebra;
  const HochschildComplex h2(p);
  const Words P{p};
  CHECK(h2.shuffle(Chain(P.w("x")), Chain(P.w("y", {"x"}))) == Chain(P.w("x y", {"x"})));
  // shuffle is a chain map: d(a * b) = d(a) * b + (-1)^|a| a * d(b)
  Sampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Chain u = rng.chain(h2, 8, 2, 1), v = rng.chain(h2, 8, 2, 1);
    if (u.is_zero() || v.is_zero()) continue;
    const int du = h2.degree(u.terms().begin()->first);
    const Rational sign = du % 2 ? Rational(-1) : Rational(1);
    CHECK(h2.d(h2.shuffle(u, v)) == h2.shuffle(h2.d(u), v) + sign * h2.shuffle(u, h2.d(v)));
  }
}

TEST_CASE("Theta and Theta'") {
  const auto s3 = Presentation::create({{"x", 3}});
  const LoopModel m3 = LoopModel::build(s3);
  const HochschildComplex h3(s3);
  const Words W{s3};
  CHECK(theta_map(m3, Chain(W.w("x"))) == parse_polynomial(m3.extended(), "x"));
  CHECK(theta_map(m3, Chain(W.w("1", {"x", "x"}))) == parse_polynomial(m3.extended(), "1/2 x_bar^2"));
  const Element xb2 = parse_polynomial(m3.extended(), "x_bar^2");
  CHECK(theta_prime(m3, h3, xb2) == Rational(2) * Chain(W.w("1", {"x", "x"})));
  CHECK(theta_map(m3, theta_prime(m3, h3, xb2)) == xb2);
  CHECK(theta_prime(m3, h3, parse_polynomial(m3.extended(), "x")) == Chain(W.w("x")));

  const auto p = oracle::load("cp2").algebra;
  const LoopModel m = LoopModel::build(p);
  const HochschildComplex hc(p);
  const Words P{p};
  CHECK(theta_map(m, Chain(P.w("x", {"y"}))) == parse_polynomial(m.extended(), "x y_bar"));
  const Element xbyb = parse_polynomial(m.extended(), "x_bar y_bar");
  const Chain lifted = theta_prime(m, hc, xbyb);
  // |s x| |s y| = 1 * 4 is even: both shuffles enter with +
  CHECK(lifted == Chain(P.w("1", {"x", "y"})) + Chain(P.w("1", {"y", "x"})));
  CHECK(theta_map(m, lifted) == xbyb);
}

TEST_CASE("HH agrees with H(L) degree by degree") {
  for (const char* name : {"cp2", "m11", "sphere3", "oddproj-3"}) {
    const auto p = oracle::load(name).algebra;
    const HochschildComplex hc(p);
    const LoopModel model = LoopModel::build(p);
    for (int n = 0; n <= 10; ++n)
      CHECK_MESSAGE(degree_cohomology(hc.complex(), n).dimension() == loop_cohomology(model, n).dimension(), name << " n=" << n);
  }
}

TEST_CASE("calculus and comparison squares on random chains") {
  Sampler rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = rng.presentation(4, 8);
    const HochschildComplex hc(p);
    const HochschildComplex raw(p, false);
    const LoopModel model = LoopModel::build(p);
    const auto w = hochschild_wiring(hc);
    const int top = p->max_generator_degree();
    const Derivation t = rng.derivation_in_range(p, -top, 2), r = rng.derivation_in_range(p, -top, 2);
    std::vector<Chain> cs;
    std::vector<Element> xs;
    for (int i = 0; i < 3; ++i) {
      cs.push_back(rng.chain(hc, 10));
      xs.push_back(rng.element_in_range(model.extended(), 0, 10));
    }
    IdentityReport rep;
    check_pre_cartan(w, t, cs, rep);
    check_cartan(w, t, r, cs, rep);
    check_mixed_complex(w.d, w.B, cs, w.show, rep);
    check_hochschild_relations(raw, t, r, cs, rep);
    check_comparison(model, hc, t, cs, xs, rep);
    for (const auto& f : rep.failures) FAIL_CHECK(f.identity << ": " << f.witness);
    CHECK(rep.ok());
  }
}

TEST_CASE("normalized and raw chains") {
  const auto p = oracle::load("cp2").algebra;
  const Words W{p};
  CHECK(Chain(W.w("x", {"1"})).is_zero());
  const HochschildComplex raw(p, false);
  CHECK_FALSE(raw.single(W.w("x", {"1"})).is_zero());
}

}  // TEST_SUITE
