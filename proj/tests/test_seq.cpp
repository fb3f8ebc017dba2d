#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "severi/seq.hpp"

using namespace severi;

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(TangencySeq{1, 0, 2}.entries() == std::vector<int>{1, 0, 2});
  CHECK(TangencySeq{1, 0} == TangencySeq{1});
  CHECK(TangencySeq{0, 0, 0} == TangencySeq{});
  CHECK(TangencySeq{}.zero());
  CHECK(TangencySeq{1, 0, 2}.length() == 3);
  CHECK_THROWS_AS(TangencySeq(std::vector<int>{1, -1}), std::invalid_argument);
}

TEST_CASE("size, weight, ipow, lcm_support") {
  CHECK(size(TangencySeq{}) == 0);
  CHECK(size(TangencySeq{4}) == 4);
  CHECK(size(TangencySeq{1, 2}) == 3);

  CHECK(weight(TangencySeq{}) == 0);
  CHECK(weight(TangencySeq{1, 2}) == 5);
  CHECK(weight(TangencySeq{0, 0, 1}) == 3);

  CHECK(ipow(TangencySeq{}) == 1);
  CHECK(ipow(TangencySeq{0, 1}) == 2);
  CHECK(ipow(TangencySeq{1, 1, 1}) == 6);

  CHECK(lcm_support(TangencySeq{}) == 1);
  CHECK(lcm_support(TangencySeq{0, 1}) == 2);
  CHECK(lcm_support(TangencySeq{1, 1, 0, 1}) == 4);
}

TEST_CASE("componentwise order and arithmetic") {
  CHECK(add(TangencySeq{1}, TangencySeq{0, 1}) == TangencySeq{1, 1});
  CHECK(sub(TangencySeq{2, 1}, TangencySeq{1}) == TangencySeq{1, 1});
  CHECK(TangencySeq::unit(3) == TangencySeq{0, 0, 1});
  CHECK_THROWS_AS(TangencySeq::unit(0), std::invalid_argument);

  CHECK(leq(TangencySeq{1, 1}, TangencySeq{2, 1}));
  CHECK_FALSE(leq(TangencySeq{2}, TangencySeq{1, 5}));
  CHECK(leq(TangencySeq{}, TangencySeq{}));
  CHECK_THROWS_AS(sub(TangencySeq{1}, TangencySeq{2}), std::invalid_argument);
}

TEST_CASE("binomials") {
  CHECK(binomial(TangencySeq{4}, TangencySeq{3}) == 4);
  CHECK(binomial(TangencySeq{2, 1}, TangencySeq{1, 1}) == 2);
  CHECK(binomial(TangencySeq{1}, TangencySeq{2}) == 0);
  CHECK(binomial(11, 2) == 55);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(4, std::vector<long>{2, 2}) == 6);
  CHECK(multinomial(5, std::vector<long>{2, 2}) == 30);
  CHECK(multinomial(0, std::vector<long>{}) == 1);
  CHECK(multinomial(7, std::vector<long>{}) == 1);
  CHECK_THROWS_AS(multinomial(3, std::vector<long>{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(3, std::vector<long>{-1}), std::invalid_argument);

  CHECK(multinomial(TangencySeq{2}, std::vector<TangencySeq>{{1}, {1}}) == 2);
  CHECK(multinomial(TangencySeq{3}, std::vector<TangencySeq>{{1}}) == 3);
  CHECK(multinomial(TangencySeq{3, 1}, std::vector<TangencySeq>{}) == 1);
  CHECK(multinomial(TangencySeq{1}, std::vector<TangencySeq>{{1}, {1}}) == 0);
}

TEST_CASE("enumerate_leq order and completeness") {
  auto below = enumerate_leq(TangencySeq{2});
  REQUIRE(below.size() == 3);
  CHECK(below[0] == TangencySeq{});
  CHECK(below[1] == TangencySeq{1});
  CHECK(below[2] == TangencySeq{2});

  CHECK(enumerate_leq(TangencySeq{}) == std::vector<TangencySeq>{TangencySeq{}});
  CHECK(enumerate_leq(TangencySeq{1, 1}).size() == 4);

  // every bound sequence of weight <= 8: distinct members, all <= a, count
  // equal to the product of (a_i + 1)
  for (int w = 0; w <= 8; ++w) {
    for (const TangencySeq& a : enumerate_weight(w)) {
      auto all = enumerate_leq(a);
      std::set<TangencySeq> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      long long expected = 1;
      for (int i = 1; i <= a.length(); ++i) expected *= a.at(i) + 1;
      CHECK(static_cast<long long>(all.size()) == expected);
      for (const TangencySeq& b : all) CHECK(leq(b, a));
    }
  }
}

TEST_CASE("enumerate_weight order and partition counts") {
  auto w0 = enumerate_weight(0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0] == TangencySeq{});

  auto w3 = enumerate_weight(3);
  REQUIRE(w3.size() == 3);
  CHECK(w3[0] == TangencySeq{3});
  CHECK(w3[1] == TangencySeq{1, 1});
  CHECK(w3[2] == TangencySeq{0, 0, 1});

  CHECK(enumerate_weight(5).size() == 7);

  auto p = testing::partition_counts(12);
  for (int n = 0; n <= 12; ++n) {
    auto all = enumerate_weight(n);
    CHECK(static_cast<long long>(all.size()) == p[static_cast<size_t>(n)]);
    std::set<TangencySeq> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const TangencySeq& c : all) CHECK(weight(c) == n);
  }
}

TEST_CASE("algebraic properties over small sequences") {
  std::vector<TangencySeq> pool;
  for (int w = 0; w <= 6; ++w) {
    for (const TangencySeq& a : enumerate_weight(w)) pool.push_back(a);
  }
  for (const TangencySeq& a : pool) {
    for (const TangencySeq& b : pool) {
      TangencySeq s = add(a, b);
      CHECK(weight(s) == weight(a) + weight(b));
      CHECK(size(s) == size(a) + size(b));
      CHECK(ipow(s) == ipow(a) * ipow(b));
      CHECK((binomial(a, b) > 0) == leq(b, a));
      CHECK(lcm_support(s) % lcm_support(a) == 0);
      CHECK(sub(s, b) == a);
    }
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(to_string(TangencySeq{}) == "0");
  CHECK(to_string(TangencySeq{1, 0, 2}) == "1,0,2");
  CHECK(to_string(TangencySeq{4}) == "4");

  CHECK(parse_seq("0") == TangencySeq{});
  CHECK(parse_seq("") == TangencySeq{});
  CHECK(parse_seq("1,0,2,0,0") == TangencySeq{1, 0, 2});
  CHECK(parse_seq("0,0") == TangencySeq{});

  for (int w = 0; w <= 8; ++w) {
    for (const TangencySeq& a : enumerate_weight(w)) {
      CHECK(parse_seq(to_string(a)) == a);
    }
  }

  CHECK_THROWS_AS(parse_seq("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("1, 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("99999999999999"), std::invalid_argument);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}
