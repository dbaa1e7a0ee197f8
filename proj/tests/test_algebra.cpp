#include <doctest.h>

#include "cartan/algebra.hpp"
#include "cartan/errors.hpp"
#include "cartan/random.hpp"
#include "oracles.hpp"

using namespace cartan;

TEST_SUITE("gca-core") {

TEST_CASE("odd squares vanish and 1 is a unit") {
  const auto p = Presentation::create({{"x", 3}});
  const Element x = Element::generator(p, 0);
  CHECK(multiply(x, x).is_zero());
  CHECK(multiply(Element::scalar(p, 1), x) == x);
  CHECK(multiply(x, Element::scalar(p, 1)) == x);
}

TEST_CASE("x_bar * (x x_bar) = x x_bar^2") {
  const auto p = Presentation::create({{"x", 3}, {"x_bar", 2}});
  const Element x = Element::generator(p, 0), xb = Element::generator(p, 1);
  const Element lhs = multiply(xb, multiply(x, xb));
  CHECK(lhs == Element(p, Monomial({1, 2})));
}

TEST_CASE("monomial bases") {
  const auto p = Presentation::create({{"x", 2}, {"y", 5}});
  CHECK(basis_of_degree(*p, 4) == std::vector<Monomial>{Monomial({2, 0})});
  CHECK(basis_of_degree(*p, 0) == std::vector<Monomial>{Monomial({0, 0})});
  const auto q = Presentation::create({{"x", 3}});
  CHECK(basis_of_degree(*q, 6).empty());
}

TEST_CASE("bases agree with brute-force enumeration") {
  Sampler rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = rng.presentation(5, 9);
    for (int n = 0; n <= 16; ++n) {
      auto want = oracle::enumerate_basis(*p, n);
      std::sort(want.begin(), want.end());
      auto got = p->basis(n);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got == want);
    }
  }
}

TEST_CASE("monomial products agree with adjacent-swap sorting") {
  Sampler rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = rng.presentation(5, 9);
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        for (const Monomial& ma : p->basis(a))
          for (const Monomial& mb : p->basis(b)) {
            const auto [sign, prod] = p->multiply(ma, mb);
            const auto [want_sign, want] = oracle::bubble_product(*p, ma, mb);
            REQUIRE(sign == want_sign);
            if (sign != 0) CHECK(prod == want);
          }
  }
}

TEST_CASE("graded commutativity, associativity and additive degree") {
  Sampler rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = rng.presentation(5, 9);
    const Element a = rng.element_in_range(p, 0, 12), b = rng.element_in_range(p, 0, 12),
                  c = rng.element_in_range(p, 0, 12);
    if (a.is_zero() || b.is_zero()) continue;
    const int da = *a.degree(), db = *b.degree();
    const Rational sign = (da * db) % 2 ? Rational(-1) : Rational(1);
    CHECK(multiply(a, b) == sign * multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const Element ab = multiply(a, b);
    if (!ab.is_zero()) CHECK(*ab.degree() == da + db);
  }
}

TEST_CASE("d o d = 0 on every monomial of the fixtures") {
  for (const char* name : {"cp2", "m11", "m14", "sphere3", "oddproj-3"}) {
    const auto doc = oracle::load(name);
    for (int n = 0; n <= 16; ++n)
      for (const Monomial& m : doc.algebra->basis(n)) {
        const Element dm(doc.algebra, doc.algebra->differential(m));
        CHECK(differential(dm).is_zero());
      }
  }
}

TEST_CASE("sums keep normal form and drop zero coefficients") {
  const auto p = Presentation::create({{"x", 2}, {"y", 3}});
  const Element x = Element::generator(p, 0), y = Element::generator(p, 1);
  const Element s = (x + Rational(1, 2) * x) - Rational(3, 2) * x;
  CHECK(s.is_zero());
  CHECK((x * y + y * x).is_zero() == false);
  CHECK(x * y == y * x);
}

TEST_CASE("invalid presentations are rejected") {
  CHECK_THROWS_AS(Presentation::create({{"x", 0}}), InvalidPresentation);
  CHECK_THROWS_AS(Presentation::create({{"x", 2}, {"x", 3}}), InvalidPresentation);
  // d y = x with |x| = 2, |y| = 3 is not homogeneous of degree +1
  Terms dy;
  add_term(dy, Monomial({1, 0}), 1);
  CHECK_THROWS(Presentation::create({{"x", 2}, {"y", 3}}, {Terms{}, dy}));
  // d z = x y with d x = 0 and d y = x^2 has d^2 z = x^3 != 0
  Terms dy2, dz;
  add_term(dy2, Monomial({2, 0, 0}), 1);
  add_term(dz, Monomial({1, 1, 0}), 1);
  CHECK_THROWS_AS(Presentation::create({{"x", 2}, {"y", 3}, {"z", 4}}, {Terms{}, dy2, dz}), InvalidPresentation);
}

TEST_CASE("inhomogeneous elements have no degree") {
  const auto p = Presentation::create({{"x", 2}, {"y", 3}});
  const Element e = Element::generator(p, 0) + Element::generator(p, 1);
  CHECK_FALSE(e.is_homogeneous());
  CHECK_THROWS_AS((void)e.degree(), DegreeError);
}

}  // TEST_SUITE
