#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "lsc/errors.hpp"
#include "lsc/parse.hpp"
#include "lsc/scale.hpp"

using namespace lsc;

namespace {

// Random scale over up to 4 generators with exponents in [-5, 5].
Scale random_scale(std::mt19937_64& rng) {
  static const char* names[] = {"a", "b", "c", "d"};
  std::vector<std::pair<std::string, std::int64_t>> exps;
  for (const char* n : names) {
    std::int64_t e =
        static_cast<std::int64_t>(rng() % 11) - 5;  // [-5, 5]
    if (e != 0 && rng() % 2 == 0) exps.emplace_back(n, e);
  }
  return Scale::from_exponents(exps);
}

}  // namespace

TEST_CASE("neutral element") {
  CHECK(Scale::one().is_one());
  CHECK(Scale::one().str() == "1");
  CHECK(Scale::one().exponents().empty());
}

TEST_CASE("product cancels and drops zeros") {
  Scale a2b_1 = Scale::from_exponents({{"a", 2}, {"b", -1}});
  Scale b = Scale::generator("b");
  CHECK(a2b_1.mul(b) == Scale::from_exponents({{"a", 2}}));
  CHECK(a2b_1.mul(b).str() == "a^2");

  Scale e = Scale::generator("e");
  CHECK(e.mul(Scale::one()) == e);
  CHECK(Scale::generator("a").mul(Scale::generator("a", -1)).is_one());
}

TEST_CASE("inverse negates exponents") {
  CHECK(Scale::generator("a", 2).inverse() == Scale::generator("a", -2));
  CHECK(Scale::one().inverse() == Scale::one());
  Scale ab_3 = Scale::from_exponents({{"a", 1}, {"b", -3}});
  CHECK(ab_3.inverse() == Scale::from_exponents({{"a", -1}, {"b", 3}}));
  CHECK(ab_3.inverse().str() == "a^-1*b^3");
}

TEST_CASE("constructor canonicalizes") {
  CHECK(Scale::from_exponents({{"a", 0}}).is_one());
  CHECK(Scale::from_exponents({{"a", 1}, {"a", -1}}).is_one());
  // duplicate generators combine
  CHECK(Scale::from_exponents({{"a", 1}, {"a", 1}}) ==
        Scale::generator("a", 2));
  // re-canonicalizing an already canonical map is the identity
  Scale s = Scale::from_exponents({{"b", -1}, {"a", 2}});
  std::vector<std::pair<std::string, std::int64_t>> exps(
      s.exponents().begin(), s.exponents().end());
  CHECK(Scale::from_exponents(exps) == s);
}

TEST_CASE("canonical text sorts generators and omits ^1") {
  Scale s = Scale::from_exponents({{"m", 1}, {"e", 2}});
  CHECK(s.str() == "e^2*m");
  CHECK(parse_scale(s.str()) == s);
}

TEST_CASE("parse accepts unsorted input and zero exponents") {
  CHECK(parse_scale("m^0*e*e") == Scale::generator("e", 2));
  CHECK(parse_scale("b^2*a") == Scale::from_exponents({{"a", 1}, {"b", 2}}));
  CHECK(parse_scale("1") == Scale::one());
  CHECK(parse_scale("a*a^-1") == Scale::one());
}

TEST_CASE("invalid generator names are rejected") {
  CHECK_THROWS_AS(Scale::generator(""), Error);
  CHECK_THROWS_AS(Scale::generator("2x"), Error);
  CHECK_THROWS_AS(Scale::generator("1"), Error);
  CHECK_THROWS_AS(Scale::generator("a b"), Error);
}

TEST_CASE("exponent overflow is detected") {
  Scale big = Scale::generator("a", INT64_MAX);
  CHECK_THROWS_AS(big.mul(Scale::generator("a", 1)), Error);
  CHECK_THROWS_AS(Scale::generator("a", INT64_MIN).inverse(), Error);
  try {
    big.mul(Scale::generator("a", 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::overflow);
  }
}

TEST_CASE("group laws hold on random elements") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    Scale a = random_scale(rng);
    Scale b = random_scale(rng);
    Scale c = random_scale(rng);
    CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
    CHECK(a.mul(b) == b.mul(a));
    CHECK(a.mul(Scale::one()) == a);
    CHECK(a.mul(a.inverse()).is_one());
    CHECK(a.inverse().inverse() == a);
    // canonical text round trip
    CHECK(parse_scale(a.str()) == a);
  }
}
