#include <doctest.h>

#include "cartan/loop_model.hpp"
#include "cartan/random.hpp"
#include "cartan/wiring.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

Derivation on_ext(const LoopModel& model, int degree, std::map<std::string, std::string> values) {
  const auto& ext = model.extended();
  std::map<std::size_t, Element> v;
  for (const auto& [g, text] : values) v.emplace(*ext->find(g), parse_polynomial(ext, text));
  return Derivation::from_values(ext, ext, degree, v);
}

Derivation base_der(const PresentationPtr& p, int degree, std::map<std::string, std::string> values) {
  std::map<std::size_t, Element> v;
  for (const auto& [g, text] : values) v.emplace(*p->find(g), parse_polynomial(p, text));
  return Derivation::from_values(p, p, degree, v);
}

Combination<Monomial> comb(const Element& x) { return {x.terms().begin(), x.terms().end()}; }

}  // namespace

TEST_SUITE("loop-model") {

TEST_CASE("differentials of barred generators") {
  const LoopModel cp2 = LoopModel::build(oracle::load("cp2").algebra);
  const auto& e = cp2.extended();
  CHECK(cp2.d(parse_polynomial(e, "x_bar")).is_zero());
  CHECK(cp2.d(parse_polynomial(e, "y_bar")) == parse_polynomial(e, "-3 x^2 x_bar"));
  const LoopModel s3 = LoopModel::build(Presentation::create({{"x", 3}}));
  CHECK(s3.extended()->has_zero_differential());
  CHECK(s3.extended()->generator(1).degree == 2);
  const LoopModel m11 = LoopModel::build(oracle::load("m11").algebra);
  CHECK(m11.d(parse_polynomial(m11.extended(), "z_bar")) == parse_polynomial(m11.extended(), "-x_bar y + x y_bar"));
  CHECK_THROWS_AS(LoopModel::build(Presentation::create({{"x", 1}})), SimplyConnectedError);
}

TEST_CASE("s and d anticommute and square to zero") {
  Sampler rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const LoopModel model = LoopModel::build(rng.presentation(5, 9));
    for (int n = 0; n <= 10; ++n)
      for (const Monomial& m : model.basis(n)) {
        const Element x(model.extended(), m);
        CHECK(model.s(model.s(x)).is_zero());
        CHECK(model.d(model.d(x)).is_zero());
        CHECK((model.d(model.s(x)) + model.s(model.d(x))).is_zero());
      }
  }
}

TEST_CASE("L and e follow v -> theta v, v_bar -> (-1)^|theta| s theta v, v_bar -> (-1)^|theta| theta v") {
  const LoopModel model = LoopModel::build(oracle::load("cp2").algebra);
  const auto p = model.base();
  const Derivation t1 = base_der(p, -5, {{"y", "1"}}), t2 = base_der(p, -3, {{"y", "x"}});
  CHECK(op_L(model, t1) == on_ext(model, -5, {{"y", "1"}}));
  CHECK(op_e(model, t1) == on_ext(model, -4, {{"y_bar", "-1"}}));
  // (-1)^{-3} = -1 on the barred slot
  CHECK(op_L(model, t2) == on_ext(model, -3, {{"y", "x"}, {"y_bar", "-x_bar"}}));
  CHECK(op_e(model, t2) == on_ext(model, -2, {{"y_bar", "-x"}}));
  CHECK(op_L(model, Derivation(p, 2)).is_zero());
  CHECK(op_e(model, Derivation(p, 2)).is_zero());
}

TEST_CASE("BV operator on cohomology") {
  const LoopModel model = LoopModel::build(Presentation::create({{"x", 3}}));
  const GradedMapSlice delta = bv_on_cohomology(model, 3);
  REQUIRE(delta.matrix.rows == 1);
  CHECK(delta.matrix.at(0, 0) == 1);
  CHECK(bv_on_cohomology(model, 0).matrix.is_zero());
  for (const char* name : {"cp2", "m11", "sphere3"}) {
    const LoopModel m = LoopModel::build(oracle::load(name).algebra);
    for (int n = 2; n <= 12; ++n) CHECK(bv_on_cohomology(m, n - 1).matrix.compose(bv_on_cohomology(m, n).matrix).is_zero());
  }
}

TEST_CASE("Hodge pieces") {
  const LoopModel cp2 = LoopModel::build(oracle::load("cp2").algebra);
  const auto h = hodge_cohomology(cp2, 5, 2);
  REQUIRE(h.dimension() == 1);
  CHECK(h.class_of(comb(parse_polynomial(cp2.extended(), "x_bar y_bar"))) == std::vector<Rational>{1});
  for (const char* name : {"cp2", "m11", "m14"}) {
    const LoopModel m = LoopModel::build(oracle::load(name).algebra);
    for (int n = 0; n <= 14; ++n)
      CHECK(hodge_cohomology(m, n, 0).dimension() == degree_cohomology(m.base_complex(), n).dimension());
  }
  const LoopModel s3 = LoopModel::build(Presentation::create({{"x", 3}}));
  for (int k = 0; k <= 5; ++k) {
    const auto hk = hodge_cohomology(s3, 2 * k, k);
    REQUIRE(hk.dimension() == 1);
    CHECK(hk.class_of(comb(power(parse_polynomial(s3.extended(), "x_bar"), k))) == std::vector<Rational>{1});
  }
}

TEST_CASE("the Hodge pieces add up to the loop cohomology") {
  for (const char* name : {"cp2", "m11", "oddproj-3"}) {
    const LoopModel m = LoopModel::build(oracle::load(name).algebra);
    for (int n = 0; n <= 12; ++n) {
      std::size_t total = 0;
      for (int k = 0; k <= n; ++k) total += hodge_cohomology(m, n, k).dimension();
      CHECK(total == loop_cohomology(m, n).dimension());
    }
  }
}

TEST_CASE("pairing matrices") {
  const LoopModel cp2 = LoopModel::build(oracle::load("cp2").algebra);
  const FundamentalClass fc = fundamental_class(cp2);
  CHECK(fc.dimension == 4);
  const PairingMatrix p00 = pairing_matrix(cp2, fc, 0, 0);
  REQUIRE(p00.rows == 1);
  REQUIRE(p00.cols == 1);
  CHECK(p00.entries[0][0] == 1);
  const PairingMatrix empty = pairing_matrix(cp2, fc, 0, 1);
  CHECK(empty.rows == 0);
  CHECK(empty.cols == 0);
  CHECK(empty.nondegenerate());
  for (int n = -4; n <= 6; ++n) {
    const PairingMatrix pm = pairing_matrix(cp2, fc, 1, n);
    CHECK(pm.rows == pm.cols);
    CHECK(pm.nondegenerate());
  }
  CHECK_THROWS_AS(fundamental_class(LoopModel::build(Presentation::create({{"x", 2}}))), NoPoincareDuality);
}

TEST_CASE("witnesses for the fundamental class") {
  const auto doc = oracle::load("m14");
  const LoopModel model = LoopModel::build(doc.algebra);
  const FundamentalClass fc = fundamental_class(model);
  const auto& ext = model.extended();
  const Element top = parse_polynomial(ext, "a^2 x w - x b v a");
  CHECK(fundamental_coordinate(fc, top) != 0);
  const Derivation t1 = *doc.derivation("t1"), ta = *doc.derivation("ta");
  // e(w_bar) = (-1)^{-7} t(w) = -t(w) and e kills a, x, b, v, w, b_bar: each displayed witness maps to -top
  const Element a1 = parse_polynomial(ext, "a^2 x w w_bar - a x b v w_bar - 2 a x v w b_bar");
  const Element aa = parse_polynomial(ext, "a x w w_bar - x b v w_bar - 2 x v w b_bar");
  CHECK(op_e(model, t1).apply(a1) == -top);
  CHECK(op_e(model, ta).apply(aa) == -top);
  for (const Derivation& t : {t1, ta}) {
    const auto alpha = hit_fundamental_class(model, fc, t);
    REQUIRE(alpha.has_value());
    CHECK(model.d(*alpha).is_zero());
    CHECK(fundamental_coordinate(fc, op_e(model, t).apply(*alpha)) == 1);
  }
  const auto m11 = oracle::load("m11");
  const LoopModel l11 = LoopModel::build(m11.algebra);
  const FundamentalClass f11 = fundamental_class(l11);
  CHECK(f11.dimension == 11);
  CHECK(hit_fundamental_class(l11, f11, *m11.derivation("t")).has_value());
}

TEST_CASE("calculus on the loop model") {
  Sampler rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = rng.presentation(5, 9);
    const LoopModel model = LoopModel::build(p);
    const auto w = loop_wiring(model);
    const int top = p->max_generator_degree();
    const Derivation t = rng.derivation_in_range(p, -top, 2), r = rng.derivation_in_range(p, -top, 2);
    std::vector<Element> xs;
    for (std::size_t g = 0; g < model.extended()->size(); ++g) xs.push_back(Element::generator(model.extended(), g));
    for (int i = 0; i < 3; ++i) xs.push_back(rng.element_in_range(model.extended(), 0, 12));
    IdentityReport rep;
    check_pre_cartan(w, t, xs, rep);
    check_cartan(w, t, r, xs, rep);
    check_mixed_complex(w.d, w.B, xs, w.show, rep);
    for (const auto& f : rep.failures) FAIL_CHECK(f.identity << ": " << f.witness);
    CHECK(rep.ok());
    // [s, L_theta] = 0 and L, e are derivations
    const Derivation L = op_L(model, t);
    for (const Element& x : xs) CHECK(model.s(L.apply(x)) == ((t.degree() % 2) ? Rational(-1) : Rational(1)) * L.apply(model.s(x)));
  }
}

TEST_CASE("H(L_theta) and H(e_theta) depend only on the class of theta") {
  Sampler rng(41);
  const auto doc = oracle::load("cp2");
  const LoopModel model = LoopModel::build(doc.algebra);
  const auto cx = model.complex();
  for (const Derivation& t : {*doc.derivation("t1"), *doc.derivation("t2")}) {
    const Derivation rho = rng.derivation(doc.algebra, t.degree() - 1);
    const Derivation t2 = t + der_differential(rho);
    for (int n = 0; n <= 12; ++n) {
      const auto src = degree_cohomology(cx, n);
      if (n + t.degree() >= 0) {
        const auto tgt = degree_cohomology(cx, n + t.degree());
        const auto via = [&](const Derivation& op) {
          return induced_map(src, tgt, [&](const Combination<Monomial>& z) {
            const Element y = op.apply(Element(model.extended(), Terms(z.begin(), z.end())));
            return comb(y);
          });
        };
        CHECK(via(op_L(model, t)) == via(op_L(model, t2)));
      }
      if (n + t.degree() + 1 >= 0) {
        const auto tgt = degree_cohomology(cx, n + t.degree() + 1);
        const auto via = [&](const Derivation& op) {
          return induced_map(src, tgt, [&](const Combination<Monomial>& z) {
            return comb(op.apply(Element(model.extended(), Terms(z.begin(), z.end()))));
          });
        };
        CHECK(via(op_e(model, t)) == via(op_e(model, t2)));
      }
    }
  }
}

}  // TEST_SUITE
