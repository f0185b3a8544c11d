#include <doctest.h>

#include "gtutte/errors.hpp"
#include "gtutte/polynomial.hpp"
#include "random_instances.hpp"

using namespace gtutte;

namespace {

UniPoly random_uni(testing::InstanceGen& gen) {
  UniPoly p;
  const long nterms = gen.uniform(0, 4);
  for (long i = 0; i < nterms; ++i)
    p += UniPoly::monomial(gen.uniform(-9, 9), gen.uniform(0, 5));
  return p;
}

BiPoly random_bi(testing::InstanceGen& gen) {
  BiPoly p;
  const long nterms = gen.uniform(0, 4);
  for (long i = 0; i < nterms; ++i)
    p += BiPoly::monomial(gen.uniform(-9, 9), gen.uniform(0, 4),
                          gen.uniform(0, 4));
  return p;
}

}  // namespace

TEST_CASE("ring laws on random polynomials") {
  testing::InstanceGen gen(77001);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly a = random_uni(gen), b = random_uni(gen), c = random_uni(gen);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == UniPoly());
    BiPoly u = random_bi(gen), v = random_bi(gen), w = random_bi(gen);
    CHECK(u * v == v * u);
    CHECK(u * (v + w) == u * v + u * w);
    CHECK((u + v) + w == u + (v + w));
  }
}

TEST_CASE("evaluation agrees with substitution") {
  testing::InstanceGen gen(77002);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly p = random_uni(gen);
    Int v = gen.uniform(-5, 5);
    CHECK(p(v) == p.substitute(UniPoly(v)).coefficient(0));
    BiPoly q = random_bi(gen);
    Int xv = gen.uniform(-4, 4), yv = gen.uniform(-4, 4);
    CHECK(q(xv, yv) == q.substitute(UniPoly(xv), UniPoly(yv)).coefficient(0));
    CHECK(q.at_x(xv)(yv) == q(xv, yv));
    CHECK(q.at_y(yv)(xv) == q(xv, yv));
    CHECK(q.swapped_xy()(yv, xv) == q(xv, yv));
  }
}

TEST_CASE("canonical text rendering") {
  BiPoly t = BiPoly::monomial(2, 1, 1) + BiPoly::monomial(2, 1, 0) +
             BiPoly::monomial(2, 0, 1) + BiPoly(-2);
  CHECK(t.str() == "2*x*y + 2*x + 2*y - 2");

  UniPoly g2 = UniPoly::monomial(1, 2) + UniPoly::monomial(-6, 1) + UniPoly(12);
  CHECK(g2.str() == "t^2 - 6*t + 12");

  UniPoly p = UniPoly::monomial(19, 2) + UniPoly::monomial(8, 1) + UniPoly(1);
  CHECK(p.str() == "19*t^2 + 8*t + 1");

  CHECK(UniPoly().str() == "0");
  CHECK(UniPoly(-3).str() == "-3");
  CHECK((UniPoly::monomial(-1, 1) + UniPoly(1)).str() == "-t + 1");

  LaurentMulti z(1);
  z.add_term(-1, {2}, 4);
  z.add_term(0, {0}, 3);
  CHECK(z.str() == "3 + 4*q^-1*v1^2");
}

TEST_CASE("degree and zero conventions") {
  CHECK(!UniPoly().degree().has_value());
  CHECK(UniPoly(5).degree() == 0);
  CHECK((UniPoly::monomial(1, 3) + UniPoly::monomial(-1, 3)).is_zero());
  CHECK(UniPoly::monomial(2, 7).degree() == 7);
}

TEST_CASE("rational evaluation certifies polynomial results") {
  // chi(t) = t^2 - 6*t + 12, argument -(1+t)/t, prefactor t^2:
  // the Betti generating function 19t^2 + 8t + 1
  UniPoly chi =
      UniPoly::monomial(1, 2) + UniPoly::monomial(-6, 1) + UniPoly(12);
  UniPoly num = UniPoly::monomial(-1, 1) + UniPoly(-1);  // -t - 1
  UniPoly got = eval_rational(chi, num, 1, UniPoly::monomial(1, 2));
  CHECK(got.str() == "19*t^2 + 8*t + 1");

  // same argument with too small a prefactor is not a polynomial
  CHECK_THROWS_AS(eval_rational(chi, num, 1, UniPoly::monomial(1, 1)),
                  NonPolynomialResult);

  // p(t/1) with trivial denominator is plain substitution
  UniPoly p = UniPoly::monomial(3, 1) + UniPoly(1);
  CHECK(eval_rational(p, UniPoly::monomial(2, 1), 0, UniPoly(1)) ==
        UniPoly::monomial(6, 1) + UniPoly(1));
}

TEST_CASE("characteristic specialization of the bivariate polynomial") {
  // T = 2xy + 2x + 2y - 2, r_A = 1, r_Gamma = 1 -> chi = 2t
  BiPoly t = BiPoly::monomial(2, 1, 1) + BiPoly::monomial(2, 1, 0) +
             BiPoly::monomial(2, 0, 1) + BiPoly(-2);
  CHECK(specialize_bi_to_uni(t, 1, 1) == UniPoly::monomial(2, 1));
}
