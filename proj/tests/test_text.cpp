#include <set>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rng.hpp"
#include "sampling.hpp"

using namespace cl8;
using testing::error_code_of;
using testing::mv;

TEST_SUITE("text") {
  TEST_CASE("parse examples") {
    CHECK(mv("e1") == ExactMv::basis(1));
    CHECK(mv("-1/2*e1357") ==
          ExactMv::blade(generator_mask(1) | generator_mask(3) | generator_mask(5) | generator_mask(7), Rational(-1, 2)));
    CHECK(mv("3/2*e13 - e2478 + 1").terms().size() == 3);
    CHECK(mv("  e1 +e1") == mv("2*e1"));
    CHECK(mv("0") == ExactMv(8));
  }

  TEST_CASE("parse errors") {
    CHECK(error_code_of([] { mv("e21"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("e11"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("e9"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("2*"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("e1 +"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("1/0"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("0.5*e1"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv("e1 e2"); }) == ErrorCode::Parse);
    CHECK(error_code_of([] { mv(""); }) == ErrorCode::Parse);
  }

  TEST_CASE("real coefficients accept decimals and exponents") {
    const RealMv a = testing::rmv("0.5*e1 - 2.5e-3*e23 + 1/4");
    CHECK(a.coefficient(generator_mask(1)) == 0.5);
    CHECK(a.coefficient(static_cast<Mask>(generator_mask(2) | generator_mask(3))) == -2.5e-3);
    CHECK(a.coefficient(0) == 0.25);
  }

  TEST_CASE("canonical formatting") {
    CHECK(format_multivector(mv("e2 + e1 + 3")) == "3 + e1 + e2");
    CHECK(format_multivector(mv("-e12")) == "-e12");
    CHECK(format_multivector(mv("e13 + e2 + e123")) == "e2 + e13 + e123");
    CHECK(format_multivector(mv("2/4*e1")) == "1/2*e1");
    CHECK(format_multivector(ExactMv(8)) == "0");
    CHECK(format_multivector(parse_multivector<Rational>("e{1,10}", 12)) == "e{1,10}");
  }

  TEST_CASE("round trip on a corpus of 150 canonical strings") {
    SplitMix64 rng(21);
    std::set<std::string> corpus;
    while (corpus.size() < 150) corpus.insert(format_multivector(random_exact_multivector(rng)));
    for (const std::string& s : corpus) {
      CHECK(format_multivector(parse_multivector<Rational>(s)) == s);
    }
  }

  TEST_CASE("real ring round trip is exact for shortest formatting") {
    SplitMix64 rng(22);
    for (int k = 0; k < 100; ++k) {
      RealMv a(8);
      for (int t = 0; t < 4; ++t) a.add_term(static_cast<Mask>(rng.integer(0, 255)), rng.normal());
      const std::string s = format_multivector(a);
      CHECK(format_multivector(parse_multivector<double>(s)) == s);
      CHECK(parse_multivector<double>(s) == a);
    }
  }
}
