#include <doctest.h>

#include "hsw/expr.hpp"
#include "hsw/series.hpp"
#include "hsw/trig.hpp"
#include "hsw/verify.hpp"
#include "hsw/wcalc.hpp"

using namespace hsw;

namespace {

const MonoidElement kZero = MonoidElement::zero();
const MonoidElement kOne = MonoidElement::unit();
const MonoidElement kZ = MonoidElement::cyclic(1);
const MonoidElement kZ2 = MonoidElement::cyclic(2);

Series1 random_series(RandomPolyGen& gen, int order, bool zero_constant) {
  Series1 f(order);
  for (int n = zero_constant ? 1 : 0; n <= order; ++n) {
    if (gen.engine()() % 3 == 0) continue;
    f[n] = gen.poly();
  }
  return f;
}

RandomPolyGen generator(std::uint64_t seed) {
  RandomPolyOptions opts;
  opts.alphabet = {kZero, kOne, kZ};
  opts.max_weight = 1;
  opts.max_terms = 2;
  return RandomPolyGen(opts, seed);
}

}  // namespace

TEST_CASE("construction and access") {
  Series1 f(4);
  CHECK(f.order() == 4);
  CHECK(f.is_zero());
  f[2] = parse_poly("e[1]");
  CHECK(Series1::monomial(parse_poly("e[1]"), 2, 4) == f);
  CHECK_THROWS_AS(f[5], std::out_of_range);
  CHECK_THROWS_AS(f[-1], std::out_of_range);
  CHECK(f.truncated(1).is_zero());
  CHECK(f.truncated(1).order() == 1);
  Series2 g(3);
  CHECK_THROWS_AS(g.at(2, 2), std::out_of_range);
  CHECK(to_string(Series1::constant(1, 2)) == "(1) + O(x^3)");
}

TEST_CASE("addition reconciles orders and variables") {
  const Series1 f = Series1::constant(parse_poly("e[1]"), 5);
  const Series1 g = Series1::monomial(1, 1, 3);
  CHECK((f + g).order() == 3);
  CHECK((f - f).is_zero());
  CHECK((f + scale(-1, f)).is_zero());
  CHECK_THROWS_AS(f + Series1::constant(1, 5, "y"), std::invalid_argument);
}

TEST_CASE("multiplication examples") {
  const Series1 f = Series1::monomial(parse_poly("e[1]"), 1, 6);
  CHECK(mul_harmonic(Series1::constant(1, 6), f) == f);
  CHECK(mul_harmonic(f, f) == Series1::monomial(parse_poly("2*e[1]e[1] - e[1]e[0]"), 2, 6));
}

TEST_CASE("inverse") {
  CHECK(inv_harmonic(Series1::constant(1, 5)) == Series1::constant(1, 5));
  const HPoly e1 = parse_poly("e[1]");
  Series1 f = Series1::constant(1, 4);
  f[1] = e1;
  const Series1 inv = inv_harmonic(f);
  CHECK(inv[0] == HPoly(1));
  CHECK(inv[1] == -e1);
  CHECK(inv[2] == harmonic(e1, e1));
  CHECK(inv[3] == -harmonic_power(e1, 3));
  CHECK_THROWS_AS(inv_harmonic(Series1::monomial(e1, 1, 4)), std::domain_error);
  Series1 g = Series1::constant(e1, 4);
  CHECK_THROWS_AS(inv_harmonic(g), std::domain_error);
}

TEST_CASE("exponential and logarithm") {
  CHECK(exp_star(Series1(6)) == Series1::constant(1, 6));
  const HPoly s = parse_poly("s[z^2,2]");
  const Series1 e = exp_star(Series1::monomial(s, 2, 6));
  CHECK(e[0] == HPoly(1));
  CHECK(e[1].is_zero());
  CHECK(e[2] == s);
  CHECK(e[3].is_zero());
  CHECK(e[4] == Rational(1, 2) * harmonic(s, s));
  CHECK(e[6] == Rational(1, 6) * harmonic_power(s, 3));
  CHECK_THROWS_AS(exp_star(Series1::constant(1, 3)), std::domain_error);
  CHECK_THROWS_AS(log_star(Series1::constant(2, 3)), std::domain_error);
}

TEST_CASE("property: log inverts exp, exp turns sums into products") {
  auto gen = generator(7);
  for (int i = 0; i < 8; ++i) {
    const Series1 f = random_series(gen, 6, true);
    const Series1 g = random_series(gen, 6, true);
    CHECK(log_star(exp_star(f)) == f);
    CHECK(exp_star(f + g) == mul_harmonic(exp_star(f), exp_star(g)));
  }
}

TEST_CASE("property: series multiplication is commutative and associative, inverse round trip") {
  auto gen = generator(3);
  for (int i = 0; i < 8; ++i) {
    const Series1 f = random_series(gen, 5, false);
    const Series1 g = random_series(gen, 5, false);
    const Series1 h = random_series(gen, 5, false);
    CHECK(mul_harmonic(f, g) == mul_harmonic(g, f));
    CHECK(mul_harmonic(mul_harmonic(f, g), h) == mul_harmonic(f, mul_harmonic(g, h)));
    Series1 u = f;
    u[0] = HPoly(1 + static_cast<int>(gen.engine()() % 3));
    CHECK(mul_harmonic(u, inv_harmonic(u)) == Series1::constant(1, 5));
  }
}

TEST_CASE("derivative and argument negation") {
  const HPoly w = parse_poly("s[z,2]");
  CHECK(derivative(Series1::constant(w, 4)).is_zero());
  CHECK(derivative(Series1::monomial(w, 3, 4)) == Series1::monomial(Rational(3) * w, 2, 3));
  CHECK(derivative(sine(kZ, 8)) == cosine(kZ, 7));
  Series1 f(3);
  f[1] = w;
  f[2] = w;
  const Series1 g = negate_argument(f);
  CHECK(g[1] == -w);
  CHECK(g[2] == w);
}

TEST_CASE("shift to two variables") {
  const HPoly w = parse_poly("s[1,2]");
  const Series2 s = shift_sum(Series1::monomial(w, 1, 4));
  CHECK(s.at(1, 0) == w);
  CHECK(s.at(0, 1) == w);
  CHECK(s.at(1, 1).is_zero());
  const Series2 one = shift_sum(Series1::constant(1, 3));
  CHECK(one.at(0, 0) == HPoly(1));
  CHECK(one.at(1, 0).is_zero());

  const Series2 shifted = shift_sum(sine(kZ, 9));
  for (int N = 0; 2 * N + 1 <= 9; ++N)
    for (int i = 0; i <= 2 * N + 1; ++i)
      CHECK(shifted.at(i, 2 * N + 1 - i) ==
            eval_w(WPoly::generator(N), kZ) * (1 / (factorial(i) * factorial(2 * N + 1 - i))));

  CHECK(embed_x(Series1::monomial(w, 2, 3)).at(2, 0) == w);
  CHECK(embed_y(Series1::monomial(w, 2, 3)).at(0, 2) == w);
}

TEST_CASE("property: the shift respects multiplication") {
  auto gen = generator(13);
  for (int i = 0; i < 6; ++i) {
    const Series1 f = random_series(gen, 4, false);
    const Series1 g = random_series(gen, 4, false);
    CHECK(shift_sum(mul_harmonic(f, g)) == mul_harmonic(shift_sum(f), shift_sum(g)));
  }
}
