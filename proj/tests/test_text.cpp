#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "nccov/text.hpp"
#include "oracle.hpp"

using namespace nccov;

namespace {
const Quaternion q1 = Quaternion::one();
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();
}  // namespace

TEST_CASE("quaternion printing") {
  CHECK(to_text(Quaternion::zero()) == "0");
  CHECK(to_text(q1) == "1");
  CHECK(to_text(-q1) == "-1");
  CHECK(to_text(qi) == "i");
  CHECK(to_text(-qi) == "-i");
  CHECK(to_text(Quaternion(Rational(1, 2), Rational(1), Rational(0),
                           Rational(-3))) == "1/2+i-3k");
  CHECK(to_text(Quaternion(1, 1, 1, 1)) == "1+i+j+k");
  CHECK(to_text(qi - q1) == "-1+i");
  CHECK(to_text(Quaternion(Rational(0), Rational(0), Rational(3, 2),
                           Rational(0))) == "3/2j");
  CHECK(to_text(Quaternion(Rational(0), Rational(-1, 4), Rational(0),
                           Rational(0))) == "-1/4i");
}

TEST_CASE("rational printing") {
  CHECK(to_text(Rational()) == "0");
  CHECK(to_text(Rational(-5, 10)) == "-1/2");
  CHECK(to_text(Rational(7)) == "7");
}

TEST_CASE("matrix printing") {
  const NcMatrix m{{q1, qi}, {qj, Quaternion(Rational(1, 2)) + qk}};
  CHECK(to_text(m) == "1,i;j,1/2+k");
  CHECK(to_text(NcMatrix{{Quaternion::zero()}}) == "0");
}

TEST_CASE("quaternion parsing") {
  CHECK(parse_quaternion("1/2+i-3k") ==
        Quaternion(Rational(1, 2), Rational(1), Rational(0), Rational(-3)));
  CHECK(parse_quaternion("0") == Quaternion::zero());
  CHECK(parse_quaternion("-i") == -qi);
  CHECK(parse_quaternion("+i") == qi);
  CHECK(parse_quaternion("2/4") == Quaternion(Rational(1, 2)));
  CHECK(parse_quaternion("i+1") == q1 + qi);  // term order is free
  CHECK(parse_quaternion("k+j+i+1") == Quaternion(1, 1, 1, 1));
  CHECK(parse_quaternion(" 1 + i ") == q1 + qi);
  CHECK(parse_quaternion("3j") ==
        Quaternion(Rational(0), Rational(0), Rational(3), Rational(0)));
  CHECK(parse_quaternion("1+i+i") == q1 + qi + qi);  // repeats accumulate
  CHECK(parse_quaternion("1-1") == Quaternion::zero());
}

TEST_CASE("matrix parsing") {
  CHECK(parse_matrix("1,i;j,1/2+k") ==
        NcMatrix{{q1, qi}, {qj, Quaternion(Rational(1, 2)) + qk}});
  CHECK(parse_matrix("5") == NcMatrix{{Quaternion(5)}});
  CHECK(parse_matrix("1, 2 ; 3, 4").rows() == 2);
  CHECK(parse_matrix("1,2,3").cols() == 3);
}

TEST_CASE("print-parse round trip") {
  oracle::OracleRng rng(99);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = oracle::to_lib(oracle::random_oquat(rng));
    CAPTURE(to_text(q));
    CHECK(parse_quaternion(to_text(q)) == q);
  }
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng.range(0, 2);
    const std::size_t c = 1 + rng.range(0, 2);
    const NcMatrix m = oracle::to_lib(oracle::random_omat(rng, r, c));
    CAPTURE(to_text(m));
    CHECK(parse_matrix(to_text(m)) == m);
  }
}

TEST_CASE("parse errors carry offsets") {
  const auto offset_of = [](const auto& fn) -> std::size_t {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };

  CHECK(offset_of([] { parse_quaternion("1+"); }) == 2);
  CHECK(offset_of([] { parse_quaternion(""); }) == 0);
  CHECK(offset_of([] { parse_quaternion("x"); }) == 0);
  CHECK(offset_of([] { parse_quaternion("1/0"); }) == 2);
  CHECK(offset_of([] { parse_quaternion("1 i"); }) == 2);

  CHECK_THROWS_AS(parse_quaternion("1+"), ParseError);
  try {
    parse_quaternion("1+");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("(offset 2)") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_matrix("1,i;j"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1;;2"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("1,"), ParseError);
}

TEST_CASE("tensor map printing") {
  const TensorPolyMap a = TensorPolyMap::from_endo(NcMatrix{{qi}});
  CHECK(to_text(a) == "arity=1 dim=1 [0|0:(1|i)]");

  TensorPolyMap b(2, 1);
  b.add_term(0, {0, 0}, {q1, qi, qj});
  CHECK(to_text(b) == "arity=2 dim=1 [0|0,0:(1|i|j)]");

  const TensorPolyMap empty(1, 2);
  CHECK(to_text(empty) == "arity=1 dim=2");
}
