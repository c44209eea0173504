#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hsw/relations.hpp"

using namespace hsw;

namespace {

bool has_relation(const std::vector<Relation>& rs, const std::string& text) {
  return std::any_of(rs.begin(), rs.end(), [&](const Relation& r) { return to_string(r) == text; });
}

}  // namespace

TEST_CASE("weight two carries no relation") { CHECK(mzv_relations(2).empty()); }

TEST_CASE("weight four") {
  const auto rs = mzv_relations(4);
  REQUIRE(rs.size() == 1);
  CHECK(to_string(rs[0]) == "4*z(2,2) - 3*z(4) = 0");
  CHECK(rs[0].weight == 4);
  CHECK(rs[0].residual < 1e-9);
  CHECK(rs[0].residual <= rs[0].bound);
  CHECK(std::find(rs[0].sources.begin(), rs[0].sources.end(), "pythagoras[N=2]") != rs[0].sources.end());
  REQUIRE(rs[0].terms.size() == 2);
  CHECK(rs[0].terms[0].coefficient == 4);
  CHECK(rs[0].terms[0].index == std::vector<int>{2, 2});
}

TEST_CASE("weight six relations hold for the known closed forms") {
  const auto rs = mzv_relations(6);
  CHECK(has_relation(rs, "16*z(2,2,2) - 3*z(6) = 0"));
  // z(2,2,2) = pi^6/7!, z(6) = pi^6/945
  CHECK(Rational(16) / 5040 == Rational(3) / 945);
  for (const auto& r : rs) {
    CHECK(r.residual < 1e-9);
    CHECK(r.residual <= r.bound);
  }
}

TEST_CASE("weight eight relations are normalized and numerically sound") {
  const auto rs = mzv_relations(8);
  CHECK_FALSE(rs.empty());
  for (const auto& r : rs) {
    CHECK(r.residual < 1e-8);
    CHECK(r.residual <= r.bound);
    REQUIRE_FALSE(r.terms.empty());
    CHECK(r.terms.front().coefficient > 0);
    mpz_class g = 0;
    for (const auto& t : r.terms) {
      CHECK(t.coefficient.get_den() == 1);
      g = gcd(g, t.coefficient.get_num());
      int w = 0;
      for (int k : t.index) w += k;
      CHECK(w == 8);
    }
    CHECK(g == 1);
  }
}

TEST_CASE("invalid weights") {
  CHECK_THROWS_AS(mzv_relations(3), std::invalid_argument);
  CHECK_THROWS_AS(mzv_relations(0), std::invalid_argument);
  CHECK_THROWS_AS(mzv_relations(kMaxRelationWeight + 2), std::invalid_argument);
}
