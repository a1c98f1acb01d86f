#include <catch2/catch_amalgamated.hpp>

#include "clq/gates.hpp"
#include "clq/random.hpp"
#include "clq/rep.hpp"
#include "clq/spinor.hpp"

using namespace clq;

namespace {
const Signature s30 = Signature::cl30();
const Signature s13 = Signature::cl13();
const std::vector<Signature> f2{s30, s30};
Multivector e(int i) { return Multivector::generator(s30, i); }
}  // namespace

TEST_CASE("primitive idempotents", "[spinor]") {
  const Multivector eps = primitive_idempotent(s30);
  CHECK(eps == (Multivector::scalar(s30, 1.0) + e(2)) * 0.5);
  CHECK(eps * eps == eps);
  const Multivector p = primitive_idempotent(s13);
  CHECK(p * p == p);
  CHECK(p == Multivector::scalar(s13, 0.5) + Multivector::blade(s13, 0b1001, -0.5));
  // eps does not absorb (1 - e3) on the right; it annihilates it
  CHECK((eps * (Multivector::scalar(s30, 1.0) - e(2))).is_zero());
  CHECK_THROWS_AS(primitive_idempotent(Signature::make(2, 0)), std::invalid_argument);
}

TEST_CASE("ideal basis spans four real dimensions", "[spinor]") {
  for (const Signature& sig : {s30, s13}) {
    const auto basis = ideal_basis(sig);
    REQUIRE(basis.size() == 4);
    CHECK(rank_of_set(std::span<const Multivector>(basis)) == 4);
    const Multivector idem = primitive_idempotent(sig);
    for (const auto& b : basis) REQUIRE(b * idem == b);
  }
  // all eight left multiples of eps stay inside a 4-dimensional space
  std::vector<Multivector> multiples;
  const Multivector eps = primitive_idempotent(s30);
  for (BladeMask m = 0; m < 8; ++m) multiples.push_back(Multivector::blade(s30, m) * eps);
  CHECK(rank_of_set(std::span<const Multivector>(multiples)) == 4);
}

TEST_CASE("encode places amplitudes on the canonical slots", "[spinor]") {
  const Multivector eps = primitive_idempotent(s30);
  CHECK(encode(QubitState(1, {Complex(1, 0), Complex{}})).body() ==
        tensor_of({e(2) * eps}));
  CHECK(encode(QubitState(1, {Complex{}, Complex(0, 1)})).body() ==
        tensor_of({Multivector::blade(s30, 0b110) * eps}));
  CHECK(encode(QubitState(2, {Complex{}, Complex{}, Complex{}, Complex(1, 0)})).body() ==
        tensor_of({e(0) * eps, e(0) * eps}));
  // the imaginary part rides in the last factor
  const IdealElement i00 = encode(QubitState(2, {Complex(0, 1), Complex{}, Complex{},
                                                 Complex{}}));
  CHECK(i00.body() == tensor_of({e(2) * eps, Multivector::blade(s30, 0b011) * eps}));
}

TEST_CASE("decode is linear and matches the first-column oracle", "[spinor]") {
  const Multivector eps = primitive_idempotent(s30);
  const Multivector s12 = Multivector::blade(s30, 0b011);
  const QubitState one_q = decode(IdealElement(tensor_of({s12 * eps})));
  CHECK(one_q.amplitudes[0] == Complex(0, 1));
  CHECK(one_q.amplitudes[1] == Complex{});
  // i * i = -1 across factors
  const QubitState two_q = decode(IdealElement(tensor_of({s12 * eps, s12 * eps})));
  CHECK(two_q.amplitudes[0] == Complex(-1, 0));
  SeededRng rng(41);
  const TensorElement idem = idempotent_tensor(f2);
  for (int t = 0; t < 200; ++t) {
    const TensorElement body = rng.tensor(f2, 4, false) * idem;
    const QubitState psi = decode(IdealElement(body));
    const ComplexMatrix m = rep_tensor(body);
    for (int i = 0; i < 4; ++i)
      REQUIRE(std::abs(psi.amplitudes[i] - m(i, 0)) < 1e-12);
  }
}

TEST_CASE("decode(encode) is the identity", "[spinor]") {
  SeededRng rng(42);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 3;
    // dyadic amplitudes reproduce exactly
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto& a : amps) a = Complex(rng.dyadic(), rng.dyadic());
    const QubitState dy(n, amps);
    REQUIRE(max_amplitude_distance(decode(encode(dy)), dy) == 0.0);
    // unit random states reproduce to a couple of ulps
    const QubitState psi = rng.state(n);
    REQUIRE(max_amplitude_distance(decode(encode(psi)), psi) < 1e-14);
  }
  // the same contract holds over Cl(1,3)+ factors
  SeededRng rng13(43);
  for (int t = 0; t < 20; ++t) {
    const QubitState psi = rng13.state(2);
    REQUIRE(max_amplitude_distance(decode(encode(psi, s13)), psi) < 1e-14);
  }
}

TEST_CASE("membership in the ideal is enforced", "[spinor]") {
  SeededRng rng(44);
  const TensorElement not_absorbed = rng.tensor(f2, 3, false);
  CHECK_THROWS_AS(IdealElement(not_absorbed), std::invalid_argument);
  CHECK_THROWS_AS(decode_checked(not_absorbed), std::invalid_argument);
  // absorbed bodies pass
  const TensorElement body = not_absorbed * idempotent_tensor(f2);
  CHECK_NOTHROW(IdealElement(body));
}

TEST_CASE("apply_gate is left multiplication intertwining the rep", "[spinor]") {
  SeededRng rng(45);
  for (int t = 0; t < 60; ++t) {
    const QubitState psi = rng.state(2);
    const IdealElement x = encode(psi);
    const char* names[3] = {"cnot", "swap", "cz"};
    const TensorElement u = gate_algebra_element(names[t % 3]);
    const QubitState got = decode(apply_gate(u, x));
    const ComplexMatrix um = rep_tensor(u);
    for (int i = 0; i < 4; ++i) {
      Complex want{};
      for (int j = 0; j < 4; ++j) want += um(i, j) * psi.amplitudes[j];
      REQUIRE(std::abs(got.amplitudes[i] - want) < 1e-12);
    }
  }
  // the sigma1 action swaps the two coefficient pairs
  SeededRng rng2(46);
  const QubitState psi = rng2.state(1);
  const QubitState flipped = decode(apply_gate(gate_x_closed_form(), encode(psi)));
  CHECK(flipped.amplitudes[0] == psi.amplitudes[1]);
  CHECK(flipped.amplitudes[1] == psi.amplitudes[0]);
  // incompatible factor lists are rejected
  CHECK_THROWS_AS(
      apply_gate(gate_cnot_closed_form(), encode(rng2.state(1))),
      std::invalid_argument);
}

TEST_CASE("encode(decode) projects the ideal", "[spinor]") {
  SeededRng rng(47);
  const TensorElement idem = idempotent_tensor(f2);
  for (int t = 0; t < 40; ++t) {
    const TensorElement body = rng.tensor(f2, 4, false) * idem;
    const IdealElement x(body);
    const IdealElement pi = encode(decode(x));
    REQUIRE(states_equal(pi, x));
    REQUIRE(max_coeff_distance(encode(decode(pi)).body(), pi.body()) < 1e-12);
  }
}

TEST_CASE("bipartite separability by the 2x2 determinant", "[spinor]") {
  const double k = 1.0 / std::sqrt(2.0);
  const IdealElement bell =
      encode(QubitState(2, {Complex(k, 0), Complex{}, Complex{}, Complex(k, 0)}));
  CHECK_FALSE(is_separable_bipartite(bell));
  const IdealElement ket01 =
      encode(QubitState(2, {Complex{}, Complex(1, 0), Complex{}, Complex{}}));
  CHECK(is_separable_bipartite(ket01));
  // product states are separable
  SeededRng rng(48);
  for (int t = 0; t < 25; ++t) {
    const QubitState a = rng.state(1);
    const QubitState b = rng.state(1);
    std::vector<Complex> amps(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        amps[2 * i + j] = a.amplitudes[i] * b.amplitudes[j];
    REQUIRE(is_separable_bipartite(encode(QubitState(2, amps))));
  }
  CHECK_THROWS_AS(is_separable_bipartite(encode(rng.state(1))), std::invalid_argument);
}

TEST_CASE("qubit state norms", "[spinor]") {
  QubitState psi(1, {Complex(1, 0), Complex(0, 0)});
  CHECK(psi.is_unit());
  psi.amplitudes[1] = Complex(1, 0);
  CHECK_FALSE(psi.is_unit());
  CHECK(psi.norm() == std::sqrt(2.0));
  CHECK_THROWS_AS(QubitState(2, {Complex(1, 0)}), std::invalid_argument);
}
