#include <doctest.h>

#include <random>
#include <unordered_set>

#include "hsw/monoid.hpp"

using namespace hsw;

namespace {

MonoidElement z(std::uint64_t n = 1) { return MonoidElement::cyclic(n); }
MonoidElement q(long num, long den = 1) { return MonoidElement::rational(Rational(num, den)); }

std::vector<MonoidElement> random_elements(std::mt19937_64& rng, bool rational, std::size_t count) {
  std::vector<MonoidElement> out;
  std::uniform_int_distribution<int> pick(0, 5);
  for (std::size_t i = 0; i < count; ++i) {
    const int r = pick(rng);
    if (r == 0)
      out.push_back(MonoidElement::zero());
    else if (r == 1)
      out.push_back(MonoidElement::unit());
    else if (rational)
      out.push_back(q((rng() % 2 ? 1 : -1) * static_cast<long>(2 + rng() % 7), 1 + static_cast<long>(rng() % 2)));
    else
      out.push_back(z(1 + rng() % 5));
  }
  return out;
}

}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(mul(MonoidElement::zero(), z(3)) == MonoidElement::zero());
  CHECK(mul(z(2), z(3)) == z(5));
  CHECK(mul(q(2), q(5, 2)) == q(5));
  CHECK(mul(q(-1), q(-1)) == MonoidElement::unit());
  CHECK(mul(MonoidElement::unit(), z(4)) == z(4));
}

TEST_CASE("powers") {
  CHECK(pow(z(1), 4) == z(4));
  CHECK(pow(MonoidElement::zero(), 0) == MonoidElement::unit());
  CHECK(pow(MonoidElement::zero(), 3) == MonoidElement::zero());
  CHECK(pow(q(2), 3) == q(8));
  CHECK(pow(q(-3, 2), 2) == q(9, 4));
}

TEST_CASE("canonical forms") {
  CHECK(z(0) == MonoidElement::unit());
  CHECK(q(1) == MonoidElement::unit());
  CHECK(q(0) == MonoidElement::zero());
  CHECK(q(4, 2) == q(2));
  CHECK(z(3).exponent() == 3);
  CHECK(MonoidElement::unit().exponent() == 0);
  CHECK(q(5, 2).value() == Rational(5, 2));
  CHECK_THROWS_AS(MonoidElement::rational(Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(MonoidElement::rational(Rational(-2, 3)), std::domain_error);
  CHECK_THROWS_AS(z(2).value(), std::logic_error);
  CHECK_THROWS_AS(q(3).exponent(), std::logic_error);
}

TEST_CASE("instances") {
  CHECK(MonoidElement::zero().instance() == MonoidInstance::Neutral);
  CHECK(MonoidElement::unit().instance() == MonoidInstance::Neutral);
  CHECK(z(2).instance() == MonoidInstance::Cyclic);
  CHECK(q(2).instance() == MonoidInstance::Rational);
  CHECK(common_instance(MonoidInstance::Neutral, MonoidInstance::Cyclic) == MonoidInstance::Cyclic);
  CHECK_THROWS_AS(common_instance(MonoidInstance::Rational, MonoidInstance::Cyclic), InstanceMismatch);
  CHECK_THROWS_AS(mul(z(1), q(2)), InstanceMismatch);
  CHECK(mul(MonoidElement::zero(), q(2)) == MonoidElement::zero());
}

TEST_CASE("ordering") {
  CHECK(MonoidElement::zero() < MonoidElement::unit());
  CHECK(MonoidElement::unit() < z(1));
  CHECK(z(1) < z(2));
  CHECK(q(-2) < q(2));
  CHECK(q(2) < q(5, 2));
}

TEST_CASE("parsing and printing") {
  CHECK(parse_element("0") == MonoidElement::zero());
  CHECK(parse_element("1") == MonoidElement::unit());
  CHECK(parse_element("z") == z(1));
  CHECK(parse_element("z^7") == z(7));
  CHECK(parse_element("z^0") == MonoidElement::unit());
  CHECK(parse_element("5/2") == q(5, 2));
  CHECK(parse_element("-3") == q(-3));
  CHECK(to_string(z(1)) == "z");
  CHECK(to_string(z(4)) == "z^4");
  CHECK(to_string(q(-5, 2)) == "-5/2");
  CHECK(to_string(MonoidElement::unit()) == "1");
  CHECK_THROWS(parse_element(""));
  CHECK_THROWS(parse_element("y"));
  CHECK_THROWS(parse_element("z^"));
  CHECK_THROWS(parse_element("1/3"));
}

TEST_CASE("property: associativity, unit and zero laws") {
  std::mt19937_64 rng(11);
  for (bool rational : {false, true}) {
    const auto xs = random_elements(rng, rational, 60);
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
      const auto& a = xs[i];
      const auto& b = xs[i + 1];
      const auto& c = xs[i + 2];
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(MonoidElement::unit(), a) == a);
      CHECK(mul(a, MonoidElement::unit()) == a);
      CHECK(mul(MonoidElement::zero(), a) == MonoidElement::zero());
    }
  }
}

TEST_CASE("property: print then parse is the identity, equal elements hash equally") {
  std::mt19937_64 rng(5);
  for (bool rational : {false, true})
    for (const auto& a : random_elements(rng, rational, 40)) {
      CHECK(parse_element(to_string(a)) == a);
      CHECK(parse_element(to_string(a)).hash() == a.hash());
    }
  std::unordered_set<MonoidElement> set{z(2), mul(z(1), z(1)), q(4, 2)};
  CHECK(set.size() == 2);
}
