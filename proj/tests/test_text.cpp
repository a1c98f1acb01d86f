#include <catch2/catch_amalgamated.hpp>

#include "clq/random.hpp"
#include "clq/text.hpp"

using namespace clq;

namespace {
const Signature s30 = Signature::cl30();
const Signature s13 = Signature::cl13();
}  // namespace

TEST_CASE("multivector grammar examples", "[text]") {
  CHECK(parse_multivector("1 + 2 e12", s30) ==
        Multivector::scalar(s30, 1.0) + Multivector::blade(s30, 0b011, 2.0));
  CHECK(parse_multivector("-0.5 e123", s30) == Multivector::blade(s30, 0b111, -0.5));
  CHECK(format_multivector(Multivector::zero(s30)) == "0");
  CHECK(parse_multivector("e12", s30) == Multivector::blade(s30, 0b011));
  // unicode minus accepted
  CHECK(parse_multivector("0.5 \xE2\x88\x92 1 g03", s13) ==
        parse_multivector("0.5 - 1 g03", s13));
}

TEST_CASE("non-ascending and malformed blades are rejected with a position", "[text]") {
  CHECK_THROWS_AS(parse_multivector("0.5 + 1 g30", s13), ParseError);
  try {
    parse_multivector("0.5 + 1 g30", s13);
  } catch (const ParseError& e) {
    CHECK(e.position == 10);  // the '0' after g3
  }
  CHECK_THROWS_AS(parse_multivector("e99", s30), ParseError);
  CHECK_THROWS_AS(parse_multivector("xyz", s30), ParseError);
  CHECK_THROWS_AS(parse_multivector("", s30), ParseError);
  CHECK_THROWS_AS(parse_multivector("1 +", s30), ParseError);
  CHECK_THROWS_AS(parse_multivector("e11", s30), ParseError);  // repeated index
}

TEST_CASE("canonical form of gamma3 gamma0", "[text]") {
  const Multivector g30 =
      Multivector::generator(s13, 3) * Multivector::generator(s13, 0);
  CHECK(format_multivector(g30) == "-1 g03");
  CHECK(format_multivector(Multivector::scalar(s13, 0.5) - g30) == "0.5 + 1 g03");
}

TEST_CASE("format/parse round trip on random elements", "[text]") {
  SeededRng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Signature sig = t % 2 ? s13 : s30;
    const Multivector a = rng.multivector(sig, 5);
    REQUIRE(parse_multivector(format_multivector(a), sig) == a);
  }
}

TEST_CASE("tensor text accepts both separators", "[text]") {
  const std::vector<Signature> f2{s30, s30};
  const TensorElement a = parse_tensor("e12\xE2\x8A\x97" "e1 + 1\xE2\x8A\x97" "e3", f2);
  const TensorElement b = parse_tensor("e12(x)e1 + 1(x)e3", f2);
  CHECK(a == b);
  CHECK(parse_tensor("0.5 1(x)1", f2) == TensorElement::identity(f2) * 0.5);
  CHECK(parse_tensor("-2", f2) == TensorElement::identity(f2) * -2.0);
}

TEST_CASE("tensor format/parse round trip", "[text]") {
  SeededRng rng(6);
  const std::vector<Signature> f2{s30, s30};
  const std::vector<Signature> f13{s13, s13};
  for (int t = 0; t < 100; ++t) {
    const auto& f = t % 2 ? f13 : f2;
    const TensorElement a = rng.tensor(f, 4);
    REQUIRE(parse_tensor(format_tensor(a), f) == a);
  }
}

TEST_CASE("amplitude lists", "[text]") {
  const auto amps = parse_amplitudes("1,0;0.5,-0.25");
  REQUIRE(amps.size() == 2);
  CHECK(amps[0] == Complex(1, 0));
  CHECK(amps[1] == Complex(0.5, -0.25));
  CHECK(format_amplitudes(amps) == "1,0;0.5,-0.25");
  CHECK_THROWS_AS(parse_amplitudes("1;2"), ParseError);
  CHECK_THROWS_AS(parse_amplitudes("a,b"), ParseError);
}

TEST_CASE("octonion text form", "[text]") {
  Octonion o;
  o.c[0] = 1.0;
  o.c[3] = -0.5;
  o.c[7] = 2.0;
  CHECK(format_octonion(o) == "1 - 0.5 o3 + 2 o7");
  CHECK(parse_octonion(format_octonion(o)) == o);
  CHECK(format_octonion(Octonion::zero()) == "0");
  CHECK_THROWS_AS(parse_octonion("o9"), ParseError);
}
