#include <random>

#include "doctest.h"
#include "gelfand/io.hpp"

using namespace gelfand;

TEST_CASE("scalar encodings") {
  CHECK(to_json(Rational::parse("-3/4")) == Json("-3/4"));
  CHECK(to_json(Rational(5)) == Json("5"));
  CHECK(to_json(QPoly({-1, 0, 1})).dump() == R"(["-1","0","1"])");
  CHECK(to_json(QPoly()).dump() == "[]");
  CHECK(to_json(std::int64_t{-2}) == Json(-2));
  CHECK(csv_cell(QPoly({0, 1})) == "[0,1]");
  CHECK(csv_cell(QPoly()) == "[]");
  CHECK(csv_cell(Rational::parse("2/6")) == "1/3");
  CHECK(csv_cell(std::int64_t{7}) == "7");
}

TEST_CASE("combinatorial encodings") {
  CHECK(to_json(Permutation({2, 1, 3})).dump() == "[2,1,3]");
  CHECK(to_json(PartialInjection({0, 3, 2})).dump() == "[0,3,2]");
  SetPartitionBijection x(3, {{0b011, 0b110}, {0b100, 0b001}});
  CHECK(to_json(x).dump() == "[[[1,2],[2,3]],[[3],[1]]]");
  CHECK(to_json(Tableau{{1, 3}, {2}}).dump() == "[[1,3],[2]]");
  IntMatrix m(2, 2);
  m(0, 1) = -1;
  m(1, 0) = 1;
  CHECK(to_json(m).dump() == "[[0,-1],[1,0]]");
}

TEST_CASE("round trips") {
  std::mt19937                       rng(23);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30), deg(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r = Rational(num(rng)) / Rational(den(rng));
    CHECK(rational_from_json(to_json(r)) == r);
    CHECK(rational_from_json(Json::parse(to_json(r).dump())) == r);
    std::vector<BigInt> c;
    for (int k = deg(rng); k >= 0; --k) c.emplace_back(num(rng));
    QPoly p(std::move(c));
    CHECK(qpoly_from_json(Json::parse(to_json(p).dump())) == p);
  }
  // big coefficients survive as strings
  QPoly big(BigInt("123456789012345678901234567890"));
  CHECK(qpoly_from_json(to_json(big)) == big);
}

TEST_CASE("decoding errors") {
  CHECK(rational_from_json(Json(4)) == Rational(4));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("a/b")), std::invalid_argument);
  CHECK_THROWS_AS(qpoly_from_json(Json("q")), std::invalid_argument);
  CHECK_THROWS_AS(qpoly_from_json(Json::array({"1/2"})), std::invalid_argument);
}
