#include <catch2/catch_amalgamated.hpp>

#include "bellinv/bell.hpp"
#include "bellinv/json_io.hpp"
#include "bellinv/rng.hpp"

using namespace bellinv;

TEST_CASE("rational strings round-trip") {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const Rational r = rng.next_rational(1000, 999);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("multipoly canonical serialization is a fixed point") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p;
    const long terms = rng.next_long(1, 6);
    for (long t = 0; t < terms; ++t) {
      std::vector<std::pair<unsigned, unsigned>> factors;
      for (unsigned v = 1; v <= 5; ++v) {
        const unsigned e = static_cast<unsigned>(rng.next_long(0, 3));
        if (e > 0) factors.emplace_back(v, e);
      }
      p += MultiPoly::term(rng.next_rational(9, 4), factors);
    }
    const Json j = to_json(p);
    const MultiPoly q = multipoly_from_json(j);
    CHECK(q == p);
    CHECK(to_json(q).dump() == j.dump());
  }
}

TEST_CASE("multipoly schema shape") {
  const Json j = to_json(bell_partition(4, 2));  // 2 x1 x3 + x2^2
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("coef") == "2");
  CHECK(j[0].at("exps") == Json{{"1", 1}, {"3", 1}});
  CHECK(j[1].at("coef") == "1");
  CHECK(j[1].at("exps") == Json{{"2", 2}});
  CHECK_THROWS_AS(multipoly_from_json(Json{{"not", "a list"}}), ParseError);
}

TEST_CASE("unipoly round-trip") {
  const UniPoly p{Rational(1, 3), Rational(0), Rational(-7)};
  const Json j = to_json(p);
  CHECK(j == Json::array({"1/3", "0", "-7"}));
  CHECK(unipoly_from_json(j) == p);
}

TEST_CASE("series round-trip") {
  Series<Rational> s(3);
  s.set_coeff(0, Rational(1));
  s.set_coeff(2, Rational(-5, 2));
  const Json j = series_to_json(s);
  CHECK(j.at("order") == 3);
  CHECK(series_from_json(j) == s);
  CHECK_THROWS_AS(series_from_json(Json::array()), ParseError);
}

TEST_CASE("problem spec files") {
  const Json j = Json::parse(R"({"p": "1/2", "terms": [{"a": "1", "q": "2"}, {"a": "-1", "q": "3"}]})");
  const ProblemSpec spec = spec_from_json(j);
  CHECK(spec.p() == Rational(1, 2));
  CHECK(spec.m() == 2);
  CHECK(spec.c(1) == Rational(-1));
  CHECK(spec_from_json(to_json(spec)).describe() == spec.describe());

  CHECK_THROWS_AS(spec_from_json(Json{{"p", "1"}}), ParseError);
  // admissibility violations surface as domain errors, not parse errors
  const Json bad = Json::parse(R"({"p": "1", "terms": [{"a": "1", "q": "2"}]})");
  CHECK_THROWS_WITH(spec_from_json(bad), Catch::Matchers::ContainsSubstring("c0 != 0"));
}

TEST_CASE("sequence files") {
  const Json j = Json::parse(R"({"values": ["1", "-3/2", "2"]})");
  const auto values = sequence_from_json(j);
  REQUIRE(values.size() == 3);
  CHECK(values[1] == Rational(-3, 2));
  CHECK(sequence_to_json(values).at("values").size() == 3);

  const Json bad = Json::parse(R"({"values": ["1", "x", "2"]})");
  CHECK_THROWS_WITH(sequence_from_json(bad), Catch::Matchers::ContainsSubstring("values[2]"));
  CHECK_THROWS_AS(sequence_from_json(Json::object()), ParseError);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.suite = "bell";
  r.order = 6;
  r.seed = 42;
  r.add(VerifyCase::pass("a.first", "x=1", "n<=6"));
  r.add(VerifyCase::fail("b.second", "x=2", "n=3", "lhs != rhs"));
  r.add(VerifyCase::skipped("c.third", "x=3", "n=1", "pole"));
  const Json j = to_json(r);
  CHECK(j.at("failures") == 1);
  CHECK(j.at("seed") == 42);
  CHECK(j.at("cases").size() == 3);
  CHECK(j.at("cases")[1].at("status") == "fail");
  CHECK(j.at("cases")[2].at("note") == "pole");
}
