#include <catch2/catch_amalgamated.hpp>

#include "clq/gates.hpp"
#include "clq/random.hpp"
#include "clq/rep.hpp"
#include "clq/tensor.hpp"

using namespace clq;

namespace {
const Signature s30 = Signature::cl30();
const Signature s13 = Signature::cl13();
const std::vector<Signature> f2{s30, s30};
Multivector e(int i) { return Multivector::generator(s30, i); }
Multivector one30() { return Multivector::scalar(s30, 1.0); }
}  // namespace

TEST_CASE("tensor_of expands multilinearly", "[tensor]") {
  CHECK(tensor_of({e(2), e(2)}) ==
        TensorElement::monomial(f2, std::vector<BladeMask>{0b100, 0b100}));
  CHECK(tensor_of({e(2) + e(0), one30()}) ==
        tensor_of({e(2), one30()}) + tensor_of({e(0), one30()}));
  CHECK_THROWS_AS(tensor_of(std::span<const Multivector>{}), std::invalid_argument);
}

TEST_CASE("the product has no cross-factor sign", "[tensor]") {
  // (e123 (x) 1)(e23 (x) 1) = (e123 e23) (x) 1 = -(e1 (x) 1)
  const TensorElement lhs =
      tensor_of({Multivector::blade(s30, 0b111), one30()}) *
      tensor_of({Multivector::blade(s30, 0b110), one30()});
  CHECK(lhs == -tensor_of({e(0), one30()}));
  // identity acts trivially
  SeededRng rng(21);
  const TensorElement x = rng.tensor(f2, 4);
  CHECK(TensorElement::identity(f2) * x == x);
  CHECK(x * TensorElement::identity(f2) == x);
}

TEST_CASE("factor mismatch is rejected", "[tensor]") {
  const std::vector<Signature> f13{s13, s13};
  const TensorElement a = TensorElement::identity(f2);
  const TensorElement b = TensorElement::identity(f13);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(
      TensorElement::monomial(f2, std::vector<BladeMask>{0b001}),
      std::invalid_argument);
}

TEST_CASE("tensor multiply is associative", "[tensor]") {
  SeededRng rng(22);
  const std::vector<Signature> f13{s13, s13};
  for (int t = 0; t < 500; ++t) {
    const auto& f = t % 2 ? f13 : f2;
    const TensorElement a = rng.tensor(f, 3);
    const TensorElement b = rng.tensor(f, 3);
    const TensorElement c = rng.tensor(f, 3);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("reverse_all acts per factor", "[tensor]") {
  const Multivector e12 = Multivector::blade(s30, 0b011);
  CHECK(reverse_all(tensor_of({e12, e(0)})) == -tensor_of({e12, e(0)}));
  CHECK(reverse_all(tensor_of({e12, e12})) == tensor_of({e12, e12}));
  CHECK(reverse_all(TensorElement::identity(f2)) == TensorElement::identity(f2));
  SeededRng rng(23);
  for (int t = 0; t < 200; ++t) {
    const TensorElement a = rng.tensor(f2, 3);
    const TensorElement b = rng.tensor(f2, 3);
    REQUIRE(reverse_all(a * b) == reverse_all(b) * reverse_all(a));
  }
}

TEST_CASE("susy_bracket is symmetric", "[tensor]") {
  SeededRng rng(24);
  const std::vector<Signature> f13{s13, s13};
  for (int t = 0; t < 200; ++t) {
    const auto& f = t % 2 ? f13 : f2;
    const TensorElement a = rng.tensor(f, 3);
    const TensorElement b = rng.tensor(f, 3);
    REQUIRE(susy_bracket(a, b) == susy_bracket(b, a));
  }
}

TEST_CASE("multiply agrees with the Kronecker oracle on pure tensors", "[tensor]") {
  SeededRng rng(25);
  for (int t = 0; t < 300; ++t) {
    const std::vector<BladeMask> ba{static_cast<BladeMask>(rng.range(8)),
                                    static_cast<BladeMask>(rng.range(8))};
    const std::vector<BladeMask> bb{static_cast<BladeMask>(rng.range(8)),
                                    static_cast<BladeMask>(rng.range(8))};
    const TensorElement a = TensorElement::monomial(f2, ba);
    const TensorElement b = TensorElement::monomial(f2, bb);
    REQUIRE(distance(rep_tensor(a * b), rep_tensor(a) * rep_tensor(b)) < 1e-12);
  }
}

TEST_CASE("exponential_tensor closed form drives the CNOT derivation", "[tensor]") {
  const TensorElement a = cnot_exponent_bracket();
  const TensorElement one2 = TensorElement::identity(f2);
  REQUIRE(a * a == -one2);
  const double pi = std::acos(-1.0);
  const TensorElement pre = tensor_of({Multivector::blade(s30, 0b111), one30()});
  REQUIRE(pre * pre == -one2);
  const TensorElement u =
      exponential_tensor(pre * (-pi / 2)) * exponential_tensor(a * (pi / 2));
  CHECK(u == gate_cnot_closed_form());
  CHECK(gate_cnot_closed_form() * gate_cnot_closed_form() == one2);
  CHECK(exponential_tensor(TensorElement::zero(f2)) == one2);
  // commuting exponents combine: exp(alpha t + theta a) = exp(alpha t) exp(theta a)
  const TensorElement combined = exponential_tensor(pre * (-pi / 2) + a * (pi / 2), 1e-14);
  CHECK(max_coeff_distance(combined, u) < 1e-12);
}

TEST_CASE("series path of exponential_tensor matches the rep oracle", "[tensor]") {
  SeededRng rng(26);
  const TensorElement a = rng.tensor(f2, 3, false);
  REQUIRE_FALSE((a * a).is_scalar_multiple_of_identity());
  CHECK(distance(rep_tensor(exponential_tensor(a)), expm(rep_tensor(a))) < 1e-10);
}

TEST_CASE("rank over sparse coefficient vectors", "[tensor]") {
  const Multivector e12 = Multivector::blade(s30, 0b011);
  const std::vector<TensorElement> dup{tensor_of({e12, one30()}),
                                       tensor_of({one30(), e12}),
                                       tensor_of({e12, one30()})};
  CHECK(rank_of_set(dup) == 2);
  const std::vector<TensorElement> mixed{
      tensor_of({e12, one30()}) + tensor_of({one30(), e12}),
      tensor_of({e12, one30()}), tensor_of({one30(), e12})};
  CHECK(rank_of_set(mixed) == 2);
  CHECK(rank_of_set(u_generator_basis(2).elements) == 16);
  CHECK(rank_of_set(std::vector<TensorElement>{}) == 0);
}
