#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clq/gates.hpp"
#include "clq/malgebra.hpp"
#include "clq/octonion.hpp"
#include "clq/random.hpp"
#include "clq/relativistic.hpp"
#include "clq/rep.hpp"
#include "clq/spinor.hpp"
#include "clq/susy.hpp"
#include "clq/text.hpp"

namespace clq {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | reported
  double residual = 0.0;
  std::string details;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  int count(const std::string& status) const {
    int n = 0;
    for (const auto& c : checks) n += c.status == status;
    return n;
  }
  bool ok() const { return count("fail") == 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::optional<double> tol_override;  // replaces per-check tolerances

  double tol(double default_tol) const { return tol_override.value_or(default_tol); }
};

namespace detail {

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, const VerifyConfig& cfg) : cfg_(cfg) {
    report_.suite = std::move(suite);
  }

  void check(const std::string& name, bool ok, double residual = 0.0,
             const std::string& details = "") {
    report_.checks.push_back({name, ok ? "pass" : "fail", residual, details});
  }
  void close(const std::string& name, double residual, double tol,
             const std::string& details = "") {
    check(name, residual <= cfg_.tol(tol), residual, details);
  }
  void reported(const std::string& name, const std::string& details,
                double residual = 0.0) {
    report_.checks.push_back({name, "reported", residual, details});
  }

  const VerifyConfig& config() const { return cfg_; }
  Report take() { return std::move(report_); }

 private:
  VerifyConfig cfg_;
  Report report_;
};

// ---------------------------------------------------------------- core --

inline Report suite_core(const VerifyConfig& cfg) {
  SuiteBuilder b("core", cfg);
  SeededRng rng(cfg.seed ^ 0x636f7265ull);
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();

  {
    bool ok30 = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Multivector gi = Multivector::generator(s30, i);
        const Multivector gj = Multivector::generator(s30, j);
        ok30 = ok30 &&
               (gi * gj + gj * gi == Multivector::scalar(s30, i == j ? 2.0 : 0.0));
      }
    b.check("cl30 generator relations 2*delta_ij, exact", ok30);
    bool ok13 = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Multivector gi = Multivector::generator(s13, i);
        const Multivector gj = Multivector::generator(s13, j);
        const double g = i != j ? 0.0 : (i == 0 ? 2.0 : -2.0);
        ok13 = ok13 && (gi * gj + gj * gi == Multivector::scalar(s13, g));
      }
    b.check("cl13 generator relations 2*g_munu, exact", ok13);
  }
  {
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
      const Signature sig = t % 2 ? s13 : s30;
      const Multivector a = rng.multivector(sig, 3);
      const Multivector x = rng.multivector(sig, 3);
      const Multivector c = rng.multivector(sig, 3);
      ok = ok && (a * x) * c == a * (x * c);
    }
    b.check("geometric product associativity, 1000 seeded triples, exact", ok);
  }
  {
    const Multivector e12 = Multivector::blade(s30, 0b011);
    const Multivector e123 = Multivector::blade(s30, 0b111);
    b.check("reverse(e12) = -e12", reverse(e12) == -e12);
    b.check("reverse(e1) = e1, reverse(scalar) = scalar",
            reverse(Multivector::generator(s30, 0)) == Multivector::generator(s30, 0) &&
                reverse(Multivector::scalar(s30, 2.5)) == Multivector::scalar(s30, 2.5));
    b.check("reverse(e123) = -e123", reverse(e123) == -e123);
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const Multivector a = rng.multivector(s30, 3);
      const Multivector c = rng.multivector(s30, 3);
      ok = ok && reverse(reverse(a)) == a && reverse(a * c) == reverse(c) * reverse(a);
    }
    b.check("reversion is an involutive anti-automorphism, random, exact", ok);
  }
  {
    const Multivector m =
        Multivector::scalar(s30, 1.0) + Multivector::blade(s30, 0b011, 1.0);
    b.check("grade_project(1+e12, 2) = e12",
            grade_project(m, 2) == Multivector::blade(s30, 0b011));
    b.check("grade_project(e123, 3) = e123",
            grade_project(Multivector::blade(s30, 0b111), 3) ==
                Multivector::blade(s30, 0b111));
    b.check("grade_project(e1+e2, 0) = 0",
            grade_project(Multivector::generator(s30, 0) + Multivector::generator(s30, 1),
                          0)
                .is_zero());
  }
  {
    const auto g = [&](int i) { return Multivector::generator(s13, i); };
    const Multivector iota = g(0) * g(1) * g(2) * g(3);
    const Multivector lhs = (-iota) * (g(1) * g(0));
    b.check("(-iota)(g1 g0) = g2 g3 = (g3 g0)(g2 g0)",
            lhs == g(2) * g(3) && lhs == (g(3) * g(0)) * (g(2) * g(0)));
  }
  {
    const double theta = rng.uniform(-2.0, 2.0);
    const Multivector e23 = Multivector::blade(s30, 0b110);
    const Multivector e123 = Multivector::blade(s30, 0b111);
    const Multivector one = Multivector::scalar(s30, 1.0);
    b.close("exp(theta e23) = cos(theta) + sin(theta) e23",
            max_coeff_distance(exponential(e23 * theta),
                               one * std::cos(theta) + e23 * std::sin(theta)),
            1e-14);
    b.close("exp(alpha e123) = cos(alpha) + sin(alpha) e123",
            max_coeff_distance(exponential(e123 * theta),
                               one * std::cos(theta) + e123 * std::sin(theta)),
            1e-14);
    b.check("exp(0) = 1", exponential(Multivector::zero(s30)) == one);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      Multivector a = rng.multivector(s30, 4, false);
      const double n = a.norm2();
      if (n > 4.0) a *= 4.0 / n;
      worst = std::max(worst, distance(rep_cl30(exponential(a)), expm(rep_cl30(a))));
    }
    b.close("rep(exp(a)) = expm(rep(a)), random Cl(3,0) with |a| <= 4", worst, 1e-10);
  }
  {
    b.check("parse '1 + 2 e12'",
            parse_multivector("1 + 2 e12", s30) ==
                Multivector::scalar(s30, 1.0) + Multivector::blade(s30, 0b011, 2.0));
    b.check("parse '-0.5 e123'", parse_multivector("-0.5 e123", s30) ==
                                     Multivector::blade(s30, 0b111, -0.5));
    b.check("format of the zero element is '0'",
            format_multivector(Multivector::zero(s30)) == "0");
    bool round = true;
    for (int t = 0; t < 100 && round; ++t) {
      const Multivector a = rng.multivector(t % 2 ? s13 : s30, 4);
      round = round && parse_multivector(format_multivector(a), a.signature()) == a;
    }
    b.check("format/parse round trip, random elements", round);
    bool rejected = false;
    std::size_t where = 0;
    try {
      parse_multivector("0.5 + 1 g30", s13);
    } catch (const ParseError& e) {
      rejected = true;
      where = e.position;
    }
    b.check("non-ascending blade 'g30' rejected with a position", rejected,
            static_cast<double>(where));
    b.check("canonical form of gamma3 gamma0 is '-1 g03'",
            format_multivector(Multivector::generator(s13, 3) *
                               Multivector::generator(s13, 0)) == "-1 g03");
  }
  return b.take();
}

// -------------------------------------------------------------- tensor --

inline Report suite_tensor(const VerifyConfig& cfg) {
  SuiteBuilder b("tensor", cfg);
  SeededRng rng(cfg.seed ^ 0x74656e73ull);
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();
  const std::vector<Signature> f2{s30, s30};
  const std::vector<Signature> f13{s13, s13};

  {
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) {
      const auto& f = t % 2 ? f13 : f2;
      const TensorElement a = rng.tensor(f, 3);
      const TensorElement x = rng.tensor(f, 3);
      const TensorElement c = rng.tensor(f, 3);
      ok = ok && (a * x) * c == a * (x * c);
    }
    b.check("tensor multiply associativity, 500 seeded triples, exact", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const TensorElement a = rng.tensor(f2, 3);
      const TensorElement c = rng.tensor(f2, 3);
      ok = ok && reverse_all(a * c) == reverse_all(c) * reverse_all(a);
    }
    b.check("reverse_all(ab) = reverse_all(b) reverse_all(a), random, exact", ok);
    const Multivector e12 = Multivector::blade(s30, 0b011);
    const Multivector e1 = Multivector::generator(s30, 0);
    b.check("reverse_all(e12 (x) e1) = -(e12 (x) e1)  [anti-hermitian]",
            reverse_all(tensor_of({e12, e1})) == -tensor_of({e12, e1}));
    b.check("reverse_all(e12 (x) e12) = e12 (x) e12  [hermitian]",
            reverse_all(tensor_of({e12, e12})) == tensor_of({e12, e12}));
    b.check("reverse_all(1 (x) 1) = 1 (x) 1",
            reverse_all(TensorElement::identity(f2)) == TensorElement::identity(f2));
  }
  {
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const auto& f = t % 2 ? f13 : f2;
      const TensorElement a = rng.tensor(f, 3);
      const TensorElement c = rng.tensor(f, 3);
      ok = ok && susy_bracket(a, c) == susy_bracket(c, a);
    }
    b.check("susy_bracket(a,b) = susy_bracket(b,a), random, exact", ok);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const std::vector<BladeMask> ba{static_cast<BladeMask>(rng.range(8)),
                                      static_cast<BladeMask>(rng.range(8))};
      const std::vector<BladeMask> bb{static_cast<BladeMask>(rng.range(8)),
                                      static_cast<BladeMask>(rng.range(8))};
      const TensorElement a = TensorElement::monomial(f2, ba);
      const TensorElement c = TensorElement::monomial(f2, bb);
      worst =
          std::max(worst, distance(rep_tensor(a * c), rep_tensor(a) * rep_tensor(c)));
    }
    b.close("multiply matches the Kronecker-product oracle on pure tensors", worst,
            1e-12);
  }
  {
    const Multivector e3 = Multivector::generator(s30, 2);
    const Multivector e1 = Multivector::generator(s30, 0);
    const Multivector one = Multivector::scalar(s30, 1.0);
    b.check("tensor_of(e3, e3) is the e3 (x) e3 monomial",
            tensor_of({e3, e3}) ==
                TensorElement::monomial(f2, std::vector<BladeMask>{0b100, 0b100}));
    b.check("tensor_of(e3+e1, 1) is multilinear",
            tensor_of({e3 + e1, one}) == tensor_of({e3, one}) + tensor_of({e1, one}));
    const Multivector g30 =
        Multivector::generator(s13, 3) * Multivector::generator(s13, 0);
    b.check("chirality factor formats canonically as -1 g03 (x) 1",
            format_tensor(tensor_of({g30, Multivector::scalar(s13, 1.0)})) ==
                std::string("-1 g03\xE2\x8A\x97") + "1");
  }
  {
    const TensorElement cnot = gate_cnot_closed_form();
    const TensorElement one2 = TensorElement::identity(f2);
    b.check("CNOT * CNOT = 1 (x) 1", cnot * cnot == one2);
    const TensorElement a = cnot_exponent_bracket();
    b.check("the half-sum bracket element squares to -1 (x) 1", a * a == -one2);
    const double pi = std::acos(-1.0);
    const TensorElement pre =
        tensor_of({Multivector::blade(s30, 0b111), Multivector::scalar(s30, 1.0)});
    b.check("CNOT exponential at alpha=-pi/2, theta=pi/2 equals the closed form, exact",
            exponential_tensor(pre * (-pi / 2)) * exponential_tensor(a * (pi / 2)) ==
                cnot);
    b.check("(e123 (x) 1)(e23 (x) 1) = -(e1 (x) 1)",
            tensor_of({Multivector::blade(s30, 0b111), Multivector::scalar(s30, 1.0)}) *
                    tensor_of({Multivector::blade(s30, 0b110),
                               Multivector::scalar(s30, 1.0)}) ==
                -tensor_of(
                    {Multivector::generator(s30, 0), Multivector::scalar(s30, 1.0)}));
    const TensorElement x = rng.tensor(f2, 4);
    b.check("(1 (x) 1) X = X", one2 * x == x && x * one2 == x);
    b.check("exp(0 tensor) = identity tensor",
            exponential_tensor(TensorElement::zero(f2)) == one2);
  }
  {
    const Multivector e12 = Multivector::blade(s30, 0b011);
    const Multivector one = Multivector::scalar(s30, 1.0);
    const std::vector<TensorElement> elems{tensor_of({e12, one}), tensor_of({one, e12}),
                                           tensor_of({e12, one})};
    b.check("rank {e12 (x) 1, 1 (x) e12, e12 (x) 1} = 2", rank_of_set(elems) == 2);
    b.check("rank of the 16 u(4) generators = 16",
            rank_of_set(u_generator_basis(2).elements) == 16);
  }
  return b.take();
}

// ----------------------------------------------------------------- rep --

inline Report suite_rep(const VerifyConfig& cfg) {
  SuiteBuilder b("rep", cfg);
  SeededRng rng(cfg.seed ^ 0x72657072ull);
  const Signature s30 = Signature::cl30();

  {
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Multivector a = rng.multivector(s30, 4, false);
      const Multivector c = rng.multivector(s30, 4, false);
      worst = std::max(worst, distance(rep_cl30(a * c), rep_cl30(a) * rep_cl30(c)));
    }
    b.close("rep homomorphism on 1000 random pairs", worst, 1e-12);
  }
  {
    bool ok = true;
    for (BladeMask m = 0; m < 8; ++m) {
      const Multivector a = Multivector::blade(s30, m);
      ok = ok && distance(rep_cl30(reverse(a)), dagger(rep_cl30(a))) == 0.0;
    }
    b.check("rep(reverse) = conjugate transpose, exact on basis blades", ok);
  }
  {
    const ComplexMatrix z = rep_cl30(Multivector::generator(s30, 2));
    b.check("rep(e3) = diag(1,-1)", z(0, 0) == Complex(1, 0) &&
                                        z(1, 1) == Complex(-1, 0) &&
                                        z(0, 1) == Complex{} && z(1, 0) == Complex{});
    const ComplexMatrix iz = rep_cl30(Multivector::blade(s30, 0b011));
    b.check("rep(e12) = diag(i,-i)",
            iz(0, 0) == Complex(0, 1) && iz(1, 1) == Complex(0, -1));
    b.check("rep(1) = identity",
            distance(rep_cl30(Multivector::scalar(s30, 1.0)),
                     ComplexMatrix::identity(2)) == 0.0);
  }
  {
    const std::vector<Signature> f2{s30, s30};
    const TensorElement e3e3 =
        TensorElement::monomial(f2, std::vector<BladeMask>{0b100, 0b100});
    const ComplexMatrix want = kron(rep_cl30(Multivector::generator(s30, 2)),
                                    rep_cl30(Multivector::generator(s30, 2)));
    b.check("rep(e3 (x) e3) = diag(1,-1) (x) diag(1,-1)",
            distance(rep_tensor(e3e3), want) == 0.0);
    const TensorElement triv =
        TensorElement::monomial(f2, std::vector<BladeMask>{0b111, 0});
    b.check("rep(e123 (x) 1) = i identity(4)",
            distance(rep_tensor(triv), ComplexMatrix::identity(4) * Complex(0, 1)) ==
                0.0);
    b.check("rep(CNOT closed form) is the CNOT permutation matrix",
            distance(rep_tensor(gate_cnot_closed_form()), gate_matrix("cnot")) == 0.0);
  }
  {
    b.check("expm(0) = identity",
            distance(expm(ComplexMatrix(4, 4)), ComplexMatrix::identity(4)) == 0.0);
    ComplexMatrix zdiag(2, 2);
    zdiag(0, 0) = 1;
    zdiag(1, 1) = -1;
    b.close("expm(logm_unitary(diag(1,-1))) = diag(1,-1)",
            distance(expm(logm_unitary(zdiag)), zdiag), 1e-10);
    double worst = 0.0;
    bool anti = true;
    for (int t = 0; t < 25; ++t) {
      const ComplexMatrix u = rng.unitary(t % 2 ? 4 : 2);
      const ComplexMatrix a = logm_unitary(u);
      anti = anti && distance(dagger(a), a * Complex(-1, 0)) < 1e-12;
      worst = std::max(worst, distance(expm(a), u));
    }
    b.close("expm(logm_unitary(u)) = u, random unitaries, anti-Hermitian log", worst,
            1e-9, anti ? "log anti-Hermitian" : "log NOT anti-Hermitian");
    bool rejected = false;
    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad(0, 0) = 2.0;
    try {
      logm_unitary(bad);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    b.check("logm_unitary rejects non-unitary input", rejected);
  }
  {
    std::vector<ComplexMatrix> paulis;
    for (const auto& e : u_generator_basis(2).elements) paulis.push_back(rep_tensor(e));
    b.check("rank_c of the 16 two-qubit i*Pauli strings = 16", rank_c(paulis) == 16);
  }
  return b.take();
}

// -------------------------------------------------------------- spinor --

inline Report suite_spinor(const VerifyConfig& cfg) {
  SuiteBuilder b("spinor", cfg);
  SeededRng rng(cfg.seed ^ 0x7370696eull);
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();
  const std::vector<Signature> f2{s30, s30};

  {
    const Multivector eps = primitive_idempotent(s30);
    const Multivector p = primitive_idempotent(s13);
    b.check("eps = 0.5 + 0.5 e3 and eps^2 = eps",
            format_multivector(eps) == "0.5 + 0.5 e3" && eps * eps == eps);
    b.check("P = 0.5 - 0.5 g03 and P^2 = P",
            format_multivector(p) == "0.5 - 0.5 g03" && p * p == p);
    const Multivector one = Multivector::scalar(s30, 1.0);
    const Multivector e3 = Multivector::generator(s30, 2);
    b.check("eps (1-e3) = 0 != eps  [non-absorption witness]",
            (eps * (one - e3)).is_zero());
    b.check("zeta(eps) = P", iso_zeta(eps) == p);
  }
  {
    for (const Signature& sig : {s30, s13}) {
      const auto basis = ideal_basis(sig);
      bool absorbed = true;
      const Multivector idem = primitive_idempotent(sig);
      for (const auto& e : basis) absorbed = absorbed && e * idem == e;
      const std::string nm = sig == s30 ? "cl30" : "cl13";
      b.check("ideal basis has rank 4 and absorbs the idempotent (" + nm + ")",
              rank_of_set(std::span<const Multivector>(basis)) == 4 && absorbed);
    }
    std::vector<Multivector> multiples;
    const Multivector eps = primitive_idempotent(s30);
    for (BladeMask m = 0; m < 8; ++m) multiples.push_back(Multivector::blade(s30, m) * eps);
    b.check("left ideal Cl(3,0) eps has real dimension exactly 4",
            rank_of_set(std::span<const Multivector>(multiples)) == 4);
  }
  {
    const Multivector eps = primitive_idempotent(s30);
    const IdealElement ket0 = encode(QubitState(1, {Complex(1, 0), Complex{}}));
    b.check("encode (1,0) = sigma3 eps",
            ket0.body() == tensor_of({Multivector::generator(s30, 2) * eps}));
    const IdealElement ione = encode(QubitState(1, {Complex{}, Complex(0, 1)}));
    b.check("encode (0,i) = sigma2 sigma3 eps",
            ione.body() == tensor_of({Multivector::blade(s30, 0b110) * eps}));
    const IdealElement ket11 =
        encode(QubitState(2, {Complex{}, Complex{}, Complex{}, Complex(1, 0)}));
    const Multivector e1 = Multivector::generator(s30, 0);
    b.check("encode (0,0,0,1) = (sigma1 (x) sigma1) eps^2",
            ket11.body() == tensor_of({e1 * eps, e1 * eps}));
  }
  {
    const Multivector eps = primitive_idempotent(s30);
    const Multivector s12 = Multivector::blade(s30, 0b011);
    const QubitState d1 = decode(IdealElement(tensor_of({s12 * eps})));
    b.check("decode(s1s2 eps) = i|0>",
            d1.amplitudes[0] == Complex(0, 1) && d1.amplitudes[1] == Complex{});
    const QubitState d2 = decode(IdealElement(tensor_of({s12 * eps, s12 * eps})));
    b.check("decode((s1s2 (x) s1s2) eps^2) = -|00>",
            d2.amplitudes[0] == Complex(-1, 0) && d2.amplitudes[1] == Complex{} &&
                d2.amplitudes[2] == Complex{} && d2.amplitudes[3] == Complex{});
    bool exact = true;
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + t % 3;
      std::vector<Complex> amps(std::size_t{1} << n);
      for (auto& a : amps) a = Complex(rng.dyadic(), rng.dyadic());
      const QubitState psi(n, amps);
      exact = exact && max_amplitude_distance(decode(encode(psi)), psi) == 0.0;
    }
    b.check("decode(encode(psi)) = psi on 100 dyadic states, exact", exact);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const QubitState psi = rng.state(1 + t % 3);
      worst = std::max(worst, max_amplitude_distance(decode(encode(psi)), psi));
    }
    b.close("decode(encode(psi)) = psi on 100 random unit states", worst, 1e-14);
  }
  {
    double worst = 0.0;
    const TensorElement idem = idempotent_tensor(f2);
    for (int t = 0; t < 200; ++t) {
      const TensorElement body = rng.tensor(f2, 4, false) * idem;
      const QubitState via_table = decode(IdealElement(body));
      const ComplexMatrix m = rep_tensor(body);
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(via_table.amplitudes[i] - m(i, 0)));
    }
    b.close("decode equals the first column of rep_tensor, 200 random ideal elements",
            worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const QubitState psi = rng.state(2);
      const IdealElement x = encode(psi);
      const char* names[3] = {"cnot", "swap", "cz"};
      const TensorElement u = gate_algebra_element(names[t % 3]);
      const QubitState got = decode(apply_gate(u, x));
      const ComplexMatrix um = rep_tensor(u);
      for (int i = 0; i < 4; ++i) {
        Complex want{};
        for (int j = 0; j < 4; ++j) want += um(i, j) * psi.amplitudes[j];
        worst = std::max(worst, std::abs(got.amplitudes[i] - want));
      }
    }
    b.close("decode(u x) = rep(u) decode(x), random two-qubit states", worst, 1e-12);
    const Multivector eps = primitive_idempotent(s30);
    const Multivector e1 = Multivector::generator(s30, 0);
    const Multivector e3 = Multivector::generator(s30, 2);
    const IdealElement in(tensor_of({e1 * eps, e3 * eps}));
    const IdealElement want(tensor_of({e1 * eps, e1 * eps}));
    b.check("CNOT maps (s1 (x) s3) eps^2 to (s1 (x) s1) eps^2",
            states_equal(apply_gate(gate_cnot_closed_form(), in), want));
    b.check("the identity tensor fixes every ideal element",
            apply_gate(TensorElement::identity(f2), in).body() == in.body());
    const IdealElement x_in = encode(rng.state(1));
    const QubitState before = decode(x_in);
    const QubitState after = decode(apply_gate(gate_x_closed_form(), x_in));
    b.check("sigma1 swaps the coefficient pairs of a one-qubit state",
            after.amplitudes[0] == before.amplitudes[1] &&
                after.amplitudes[1] == before.amplitudes[0]);
  }
  {
    bool ok = true;
    const TensorElement idem = idempotent_tensor(f2);
    for (int t = 0; t < 50 && ok; ++t) {
      const TensorElement body = rng.tensor(f2, 4, false) * idem;
      const IdealElement x(body);
      const IdealElement pi = encode(decode(x));
      ok = ok && states_equal(pi, x) &&
           max_coeff_distance(encode(decode(pi)).body(), pi.body()) <= 1e-12;
    }
    b.check("encode(decode(.)) is the identity on the canonical subspace and a "
            "projection on the full ideal",
            ok);
  }
  {
    const double inv = 1.0 / std::sqrt(2.0);
    const IdealElement bell =
        encode(QubitState(2, {Complex(inv, 0), Complex{}, Complex{}, Complex(inv, 0)}));
    b.check("(|00>+|11>)/sqrt2 is entangled (|det| = 1/2)",
            !is_separable_bipartite(bell));
    const IdealElement ket01 =
        encode(QubitState(2, {Complex{}, Complex(1, 0), Complex{}, Complex{}}));
    b.check("|01> is separable", is_separable_bipartite(ket01));
    bool rejected = false;
    try {
      (void)decode_checked(rng.tensor(f2, 3, false));
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    b.check("decode rejects an element outside the ideal", rejected);
  }
  return b.take();
}

// --------------------------------------------------------------- gates --

inline Report suite_gates(const VerifyConfig& cfg) {
  SuiteBuilder b("gates", cfg);
  SeededRng rng(cfg.seed ^ 0x67617465ull);
  const Signature s30 = Signature::cl30();

  for (int n = 1; n <= 3; ++n) {
    const GeneratorBasis basis = u_generator_basis(n);
    const int want = 1 << (2 * n);
    bool anti = true;
    for (const auto& e : basis.elements) anti = anti && reverse_all(e) == -e;
    b.check("u(2^" + std::to_string(n) + "): " + std::to_string(want) +
                " elements, all anti-hermitian",
            static_cast<int>(basis.elements.size()) == want && anti);
    b.check("u(2^" + std::to_string(n) + "): tensor-coefficient rank " +
                std::to_string(want),
            rank_of_set(basis.elements) == want);
    std::vector<ComplexMatrix> images;
    for (const auto& e : basis.elements) images.push_back(rep_tensor(e));
    b.check(
        "u(2^" + std::to_string(n) + "): rep-image complex rank " + std::to_string(want),
        rank_c(images) == want);
  }
  {
    const GeneratorBasis basis = u_generator_basis(2);
    bool ok = true;
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
      ComplexMatrix pauli = ComplexMatrix::identity(1);
      for (const char c : basis.labels[k]) {
        ComplexMatrix p(2, 2);
        switch (c) {
          case 'I': p = ComplexMatrix::identity(2); break;
          case 'X': p = gate_matrix("x"); break;
          case 'Y': p = gate_matrix("y"); break;
          default: p = gate_matrix("z");
        }
        pauli = kron(pauli, p);
      }
      ok = ok && distance(rep_tensor(basis.elements[k]), pauli * Complex(0, 1)) == 0.0;
    }
    b.check("rep(basis element) = i * Pauli string, exact (n = 2)", ok);
  }
  {
    const auto g = [&](int i) { return Multivector::generator(s30, i); };
    const Multivector s12 = g(0) * g(1);
    const Multivector s23 = g(1) * g(2);
    const Multivector s31 = g(2) * g(0);
    const Multivector triv = g(0) * g(1) * g(2);
    const auto comm = [](const Multivector& x, const Multivector& y) {
      return x * y - y * x;
    };
    b.check("[s1s2, s2s3] = -2 s3s1", comm(s12, s23) == s31 * -2.0);
    b.check("[s1s2, s3s1] = 2 s2s3", comm(s12, s31) == s23 * 2.0);
    b.check("[s2s3, s3s1] = -2 s1s2", comm(s23, s31) == s12 * -2.0);
    b.check("the trivector is central",
            comm(s12, triv).is_zero() && comm(s23, triv).is_zero() &&
                comm(s31, triv).is_zero());
    std::vector<Multivector> closure{Multivector::scalar(s30, 1.0), s12, s23, s31, triv};
    for (const auto& x : {s12, s23, s31, triv})
      for (const auto& y : {s12, s23, s31, triv}) closure.push_back(comm(x, y));
    b.check("commutators stay inside span{1, basis}",
            rank_of_set(std::span<const Multivector>(closure)) == 5);
  }
  {
    const double pi = std::acos(-1.0);
    b.check("exp(-pi/2 s123) exp(pi/2 s23) = s1, exact",
            exponential(Multivector::blade(s30, 0b111) * (-pi / 2)) *
                    exponential(Multivector::blade(s30, 0b110) * (pi / 2)) ==
                Multivector::generator(s30, 0));
    const TensorElement a = cnot_exponent_bracket();
    const TensorElement pre =
        tensor_of({Multivector::blade(s30, 0b111), Multivector::scalar(s30, 1.0)});
    b.check("CNOT exponential route equals the closed form, exact",
            exponential_tensor(pre * (-pi / 2)) * exponential_tensor(a * (pi / 2)) ==
                gate_cnot_closed_form());
    b.check("rep(CNOT closed form) fixes |00>,|01> and swaps |10>,|11>",
            distance(rep_tensor(gate_cnot_closed_form()), gate_matrix("cnot")) == 0.0);
    const Multivector eps = primitive_idempotent(s30);
    const Multivector e1 = Multivector::generator(s30, 0);
    const Multivector e3 = Multivector::generator(s30, 2);
    const TensorElement cnot = gate_cnot_closed_form();
    const auto st = [&](const Multivector& x, const Multivector& y) {
      return tensor_of({x * eps, y * eps});
    };
    b.check("CNOT basis actions: fixes (s3,s3) and (s3,s1), swaps (s1,s3) <-> (s1,s1)",
            cnot * st(e3, e3) == st(e3, e3) && cnot * st(e3, e1) == st(e3, e1) &&
                cnot * st(e1, e3) == st(e1, e1) && cnot * st(e1, e1) == st(e1, e3));
  }
  {
    SynthesisInfo info;
    const TensorElement gid = synthesize(ComplexMatrix::identity(2), 1, &info);
    b.check("synthesize(identity) = zero element with exp = 1",
            gid.is_zero() && info.residual <= cfg.tol(1e-8), info.residual);
    synthesize(gate_matrix("x"), 1, &info);
    b.close("synthesize(X) round trip", info.residual, 1e-8);
    synthesize(gate_matrix("h"), 1, &info);
    b.close("synthesize(Hadamard) round trip", info.residual, 1e-8);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      synthesize(rng.unitary(2), 1, &info);
      worst = std::max(worst, info.residual);
    }
    b.close("synthesis round trip on 50 random U(2)", worst, 1e-8);
    worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      synthesize(rng.unitary(4), 2, &info);
      worst = std::max(worst, info.residual);
    }
    b.close("synthesis round trip on 50 random U(4)", worst, 1e-8);
  }
  {
    double worst = 0.0;
    for (const char* name : {"x", "y", "z", "h", "s", "t", "cnot", "swap", "cz"})
      worst = std::max(
          worst, distance(rep_tensor(gate_algebra_element(name)), gate_matrix(name)));
    b.close("catalog algebra elements represent their matrices", worst, 1e-15);
  }
  return b.take();
}

// -------------------------------------------------------- relativistic --

inline Report suite_relativistic(const VerifyConfig& cfg) {
  SuiteBuilder b("relativistic", cfg);
  SeededRng rng(cfg.seed ^ 0x72656c61ull);
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();
  const std::vector<Signature> f13{s13, s13};
  const auto g = [&](int i) { return Multivector::generator(s13, i); };
  const Multivector iota = g(0) * g(1) * g(2) * g(3);

  {
    b.check("zeta(s3) = g3 g0", iso_zeta(Multivector::generator(s30, 2)) == g(3) * g(0));
    b.check("zeta(s1 s2) = -g1 g2",
            iso_zeta(Multivector::blade(s30, 0b011)) == -(g(1) * g(2)));
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      const Multivector a = rng.multivector(s30, 3);
      const Multivector c = rng.multivector(s30, 3);
      ok = ok && iso_zeta(a * c) == iso_zeta(a) * iso_zeta(c) &&
           iso_zeta_inv(iso_zeta(a)) == a;
    }
    b.check("zeta is an algebra homomorphism with two-sided inverse, random, exact",
            ok);
    std::vector<Multivector> images;
    for (BladeMask m = 0; m < 8; ++m) images.push_back(iso_zeta(Multivector::blade(s30, m)));
    b.check("zeta is bijective on the 8-dimensional basis",
            rank_of_set(std::span<const Multivector>(images)) == 8);
    bool rejected = false;
    try {
      iso_zeta_inv(Multivector::generator(s13, 1));
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    b.check("iso_zeta_inv rejects odd-grade input", rejected);
  }
  const TensorElement g5 = chirality_op();
  const auto [pr, pl] = chiral_projectors();
  const TensorElement one2 = TensorElement::identity(f13);
  {
    b.check("Gamma5 is self-adjoint under the representation tilde",
            rep_adjoint_all(g5) == g5);
    b.check("P_R + P_L = 1 (x) 1", pr + pl == one2);
    b.check("P_R^2 = P_R and P_L^2 = P_L", pr * pr == pr && pl * pl == pl);
    b.check("P_R P_L = 0", (pr * pl).is_zero());
  }
  const TensorElement idem2 = idempotent_tensor(f13);
  const Multivector seconds[4] = {g(3) * g(0), iota * (g(3) * g(0)), g(1) * g(0),
                                  iota * (g(1) * g(0))};
  const auto bipartite = [&](const double alpha[8]) {
    TensorElement psi = TensorElement::zero(f13);
    for (int k = 0; k < 8; ++k) {
      const Multivector first = k < 4 ? g(3) * g(0) : g(1) * g(0);
      psi += tensor_of({first, seconds[k % 4]}) * alpha[k];
    }
    return psi * idem2;
  };
  {
    double alpha[8];
    for (double& a : alpha) a = rng.dyadic();
    double alpha_r[8] = {alpha[0], alpha[1], alpha[2], alpha[3], 0, 0, 0, 0};
    double alpha_l[8] = {0, 0, 0, 0, alpha[4], alpha[5], alpha[6], alpha[7]};
    const TensorElement psi = bipartite(alpha);
    const TensorElement psi_r = bipartite(alpha_r);
    const TensorElement psi_l = bipartite(alpha_l);
    b.check("P_R keeps exactly the alpha_1..alpha_4 block", pr * psi == psi_r);
    b.check("P_L keeps exactly the alpha_5..alpha_8 block", pl * psi == psi_l);
    b.check("Gamma5 Psi_R = Psi_R and Gamma5 Psi_L = -Psi_L",
            g5 * psi_r == psi_r && g5 * psi_l == -psi_l);
    b.check("Psi = P_R Psi + P_L Psi", pr * psi + pl * psi == psi);
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 200 && ok; ++t) {
      const IdealElement psi = encode(rng.state(2), s13);
      for (const TensorElement* proj : {&pr, &pl}) {
        const TensorElement projected = *proj * psi.body();
        if (projected.is_zero()) continue;
        const QubitState amps = decode(IdealElement(projected));
        const Complex det = amps.amplitudes[0] * amps.amplitudes[3] -
                            amps.amplitudes[1] * amps.amplitudes[2];
        worst = std::max(worst, std::abs(det));
        ok = ok && std::abs(det) < cfg.tol(1e-10);
      }
    }
    b.check("chiral projections of 200 random bipartite states are separable", ok,
            worst);
  }
  {  // parity actions: sign flip on the alpha_5..alpha_8 block, phase out front
    const double phis[2] = {0.0, rng.uniform(0.1, 3.0)};
    for (const double phi : phis) {
      const TensorElement p = parity_op(phi);
      double alpha[8];
      for (double& a : alpha) a = rng.dyadic();
      double flipped[8];
      for (int k = 0; k < 8; ++k) flipped[k] = k < 4 ? alpha[k] : -alpha[k];
      const TensorElement phase =
          tensor_of({Multivector::scalar(s13, 1.0),
                     Multivector::scalar(s13, 1.0) * std::cos(phi) + iota * std::sin(phi)});
      const double d =
          max_coeff_distance(p * bipartite(alpha), phase * bipartite(flipped));
      b.close("parity action flips the alpha_5..alpha_8 block (phi = " +
                  format_double(phi) + ")",
              d, 1e-14);
      b.check("parity(phi) is unitary under the representation tilde (phi = " +
                  format_double(phi) + ")",
              p * rep_adjoint_all(p) == one2);
    }
    const double phi = phis[1];
    const TensorElement tilde_want =
        tensor_of({Multivector::scalar(s13, 1.0),
                   Multivector::scalar(s13, 1.0) * std::cos(phi) - iota * std::sin(phi)}) *
        tensor_of({g(3) * g(0), Multivector::scalar(s13, 1.0)});
    b.close("tilde(parity(phi)) = [1 (x) (cos - iota sin)](g3g0 (x) 1)",
            max_coeff_distance(rep_adjoint_all(parity_op(phi)), tilde_want), 1e-14);
  }
  {  // charge conjugation
    const TensorElement c = charge_conjugation_op();
    b.check("C = g3g0 g2g0 (x) g2g0 (the rewritten closed form)",
            c == tensor_of({(g(3) * g(0)) * (g(2) * g(0)), g(2) * g(0)}));
    b.check("tilde(C) = -C (anti-self-adjoint)", rep_adjoint_all(c) == -c);
    b.check("C tilde(C) = 1 (x) 1 (unitary)", c * rep_adjoint_all(c) == one2,
            0.0, "intrinsic reversion sign: C rev(C) = " +
                     format_tensor(c * reverse_all(c)));
    bool ok = true;
    for (const auto& cse : charge_conjugation_action_table())
      ok = ok && states_equal(c * cse.input, cse.expected, cfg.tol(1e-12));
    b.check("the four C basis-state actions hold", ok);
    ok = true;
    double worst = 0.0;
    for (const auto& cse : charge_conjugation_bell_table()) {
      ok = ok && states_equal(c * cse.input, cse.expected, cfg.tol(1e-12));
      const QubitState amps = decode(IdealElement(c * cse.input));
      const Complex det = amps.amplitudes[0] * amps.amplitudes[3] -
                          amps.amplitudes[1] * amps.amplitudes[2];
      worst = std::max(worst, std::abs(std::abs(det) - 0.5));
    }
    b.check("C conducts the Bell combinations into Bell-type images", ok);
    b.close("C preserves maximal entanglement (|det| = 1/2)", worst, 1e-12);
  }
  {  // time reversal
    const TensorElement t = time_reversal_op();
    b.check("tilde(T) = T (self-adjoint)", rep_adjoint_all(t) == t, 0.0,
            "intrinsic reversion gives reverse_all(T) = -T: " +
                std::string(reverse_all(t) == -t ? "true" : "false"));
    b.check("T tilde(T) = 1 (x) 1 (unitary)", t * rep_adjoint_all(t) == one2);
    bool ok = true;
    for (const auto& cse : time_reversal_action_table())
      ok = ok && states_equal(t * cse.input, cse.expected, cfg.tol(1e-12));
    b.check("the four T basis-state actions hold", ok);
    ok = true;
    double worst = 0.0;
    for (const auto& cse : time_reversal_bell_table()) {
      ok = ok && states_equal(t * cse.input, cse.expected, cfg.tol(1e-12));
      const QubitState amps = decode(IdealElement(t * cse.input));
      const Complex det = amps.amplitudes[0] * amps.amplitudes[3] -
                          amps.amplitudes[1] * amps.amplitudes[2];
      worst = std::max(worst, std::abs(std::abs(det) - 0.5));
    }
    b.check("T carries the Bell combinations to their tabulated images", ok);
    b.close("T preserves maximal entanglement (|det| = 1/2)", worst, 1e-12);
  }
  return b.take();
}

// ---------------------------------------------------------------- susy --

inline Report suite_susy(const VerifyConfig& cfg) {
  SuiteBuilder b("susy", cfg);
  const Signature s13 = Signature::cl13();
  const ThetaElements th = theta_elements();
  const Multivector* thetas[2] = {&th.theta1, &th.theta2};
  const Multivector* bars[2] = {&th.theta1_bar, &th.theta2_bar};

  {
    bool cross_ok = true;
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        const Multivector want = Multivector::scalar(s13, a == c ? 2.0 : 0.0);
        cross_ok = cross_ok && susy_bracket(*thetas[a], *bars[c]) == want &&
                   susy_bracket(*bars[c], *thetas[a]) == want;
      }
    b.check("{theta_a, theta_bar_b} = 2 delta_ab, all ordered pairs, exact", cross_ok);
    bool same_ok = true;
    std::string common;
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        const Multivector lhs = susy_bracket(*thetas[a], *thetas[c]);
        const Multivector rhs = susy_bracket(*bars[a], *bars[c]);
        same_ok = same_ok && lhs == rhs;
        if (a == 0 && c == 0) common = format_multivector(lhs);
      }
    b.check("{theta_a, theta_b} = {theta_bar_a, theta_bar_b}, all pairs, exact",
            same_ok);
    b.reported("common value of the unbarred/barred brackets",
               "computed value: " + common + " (for every pair)");
  }
  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& cse : theta_action_table()) {
      const double d = max_coeff_distance(cse.op * cse.input * 0.5, cse.expected);
      worst = std::max(worst, d);
      ok = ok && d == 0.0;
    }
    b.check("the eight theta actions on the base elements hold, exact", ok,
            worst);
  }
  {
    const auto mats = theta_matrix_rep();
    const double want[4][2][2] = {{{2, 0}, {0, 0}},
                                  {{0, 0}, {0, 2}},
                                  {{0, 0}, {2, 0}},
                                  {{0, -2}, {0, 0}}};
    const char* names[4] = {"theta1", "theta1_bar", "theta2", "theta2_bar"};
    for (int k = 0; k < 4; ++k) {
      bool ok = true;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          ok = ok && mats[k](i, j) == Complex(want[k][i][j], 0.0);
      b.check(std::string("matrix of ") + names[k] + " matches the reference form", ok);
    }
  }
  {
    const TensorElement chat = charge_conj_hat();
    b.check("transpose(rep(C_hat)) equals the reference 4x4 matrix",
            distance(transpose(rep_tensor(chat)), charge_conj_hat_reference_matrix()) ==
                0.0);
    b.check("reverse_all(C_hat) = -C_hat", reverse_all(chat) == -chat);
    b.check("tilde(C_hat) = -C_hat (representation adjoint)",
            rep_adjoint_all(chat) == -chat);
    bool ok = true;
    for (const auto& cse : charge_conj_hat_bell_table())
      ok = ok && states_equal(chat * cse.input, cse.expected, cfg.tol(1e-12));
    b.check("both C_hat Bell actions hold", ok);
  }
  return b.take();
}

// ----------------------------------------------------------- m-algebra --

inline Report suite_malgebra(const VerifyConfig& cfg) {
  SuiteBuilder b("m-algebra", cfg);
  const MAlgebraReport rep = verify_m_algebra();

  b.check("cl07: 7 generators, all squares -1, all 21 pairs anticommute, exact",
          rep.cl07_check.relations_hold &&
              rep.cl07_check.measured_signature == std::vector<int>(7, -1),
          0.0, "measured signature: " +
                   [&] {
                     std::string s;
                     for (int v : rep.cl07_check.measured_signature)
                       s += v > 0 ? "+" : "-";
                     return s;
                   }());
  {
    int plus = 0, minus = 0;
    for (int v : rep.cl101_check.measured_signature) (v > 0 ? plus : minus)++;
    std::string sig;
    for (int v : rep.cl101_check.measured_signature) sig += v > 0 ? "+" : "-";
    b.check("cl101: 11 generators, measured signature ten +1 / one -1, all 55 pairs "
            "anticommute, exact",
            rep.cl101_check.relations_hold && plus == 10 && minus == 1, 0.0,
            "measured signature: " + sig);
  }
  {
    const GeneratorFamily fam = cl101_generators();
    const int two[2] = {3, 7};
    const AntisymGamma g2 = antisym_gamma(fam, two);
    b.check("antisym_gamma rank 2 collapses to the ordered product",
            g2.value == fam.elements[3] * fam.elements[7] && !g2.repeated_index);
    const int five[5] = {0, 2, 4, 8, 10};
    TensorElement ordered = fam.elements[0];
    for (const int i : {2, 4, 8, 10}) ordered = ordered * fam.elements[i];
    const AntisymGamma g5 = antisym_gamma(fam, five);
    b.check("antisym_gamma rank 5 collapses to the ordered product",
            g5.value == ordered && !g5.repeated_index);
    const int rep2[2] = {4, 4};
    const AntisymGamma gr = antisym_gamma(fam, rep2);
    b.check("antisym_gamma flags a repeated index and returns zero",
            gr.repeated_index && gr.value.is_zero());
    const int one[1] = {5};
    b.check("antisym_gamma rank 1 is the generator itself",
            antisym_gamma(fam, one).value == fam.elements[5]);
  }
  b.check("counts C(11,1)=11, C(11,2)=55, C(11,5)=462, total 528",
          rep.count1 == 11 && rep.count2 == 55 && rep.count5 == 462 && rep.total == 528);
  b.check("tensor-coefficient rank of the 528 elements = 528", rep.tensor_rank == 528,
          static_cast<double>(rep.tensor_rank));
  b.reported("C_hat5 recipe (product of antisymmetric-rep generators)",
             std::string("xi per generator: ") +
                 [&] {
                   std::string s;
                   for (int v : rep.xi) s += v > 0 ? "+" : (v < 0 ? "-" : "?");
                   return s;
                 }() +
                 "; uniform: " + (rep.xi_uniform ? "yes" : "no") +
                 "; xi = " + std::to_string(rep.xi_value) +
                 ", alpha = " + std::to_string(rep.alpha) +
                 "; consistent with xi=(-1)^{p-1}, alpha=(-1)^{p(p-1)/2} at (p,q)=(10,1): " +
                 (rep.relations_consistent ? "yes" : "no"));
  b.reported("symmetric-matrix count of the 528 rep images",
             std::to_string(rep.symmetric_count) + " of " + std::to_string(rep.total) +
                 " images are symmetric 32x32 matrices");
  b.reported("complex rank of the 528 rep images vs dim(sym 32x32) = 528",
             "rank = " + std::to_string(rep.rep_rank));
  return b.take();
}

// ------------------------------------------------------------ octonion --

inline Report suite_octonion(const VerifyConfig& cfg) {
  SuiteBuilder b("octonion", cfg);
  SeededRng rng(cfg.seed ^ 0x6f63746full);

  const auto random_oct = [&] {
    std::array<double, 8> c;
    for (double& x : c) x = rng.uniform(-1.0, 1.0);
    return Octonion(c);
  };
  {
    bool ok = true;
    for (int i = 1; i <= 7; ++i)
      ok = ok && oct_multiply(Octonion::unit(i), Octonion::unit(i)) ==
                     Octonion::real(-1.0);
    b.check("o_i o_i = -1 for i = 1..7", ok);
    b.check("o1 o2 = o3 under the chosen Fano table",
            oct_multiply(Octonion::unit(1), Octonion::unit(2)) == Octonion::unit(3));
    bool anti = true;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          const double c = oct_structure_constant(i, j, k);
          anti = anti && c == -oct_structure_constant(j, i, k) &&
                 c == -oct_structure_constant(i, k, j);
        }
    b.check("structure constants are totally antisymmetric", anti);
  }
  {
    const Octonion a = random_oct();
    double s = 0.0;
    for (double x : a.c) s += x * x;
    b.close("|o| = sqrt(sum of squares) and o o* is that scalar",
            std::max(std::abs(oct_norm(a) - std::sqrt(s)),
                     oct_norm(oct_multiply(a, oct_conj(a)) -
                              Octonion::real(oct_norm(a) * oct_norm(a)))),
            1e-12);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Octonion a = random_oct();
      const Octonion c = random_oct();
      const double lhs = oct_norm(oct_multiply(a, c));
      const double rhs = oct_norm(a) * oct_norm(c);
      if (rhs > 1e-12) worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    b.close("norm multiplicativity |ab| = |a||b|, 1000 random pairs, relative", worst,
            1e-10);
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
      const Octonion a = random_oct();
      const Octonion c = random_oct();
      worst = std::max(worst, oct_norm(oct_multiply(a, oct_multiply(a, c)) -
                                       oct_multiply(oct_multiply(a, a), c)));
      worst = std::max(worst, oct_norm(oct_multiply(oct_multiply(c, a), a) -
                                       oct_multiply(c, oct_multiply(a, a))));
    }
    b.close("alternativity a(ab) = (aa)b and (ba)a = b(aa), random", worst, 1e-12);
  }
  {
    const Octonion w = oct_multiply(oct_multiply(Octonion::unit(1), Octonion::unit(2)),
                                    Octonion::unit(4)) -
                       oct_multiply(Octonion::unit(1),
                                    oct_multiply(Octonion::unit(2), Octonion::unit(4)));
    b.check("non-associativity witness (o1 o2) o4 != o1 (o2 o4), difference norm 2",
            std::abs(oct_norm(w) - 2.0) == 0.0, oct_norm(w));
    bool units_ok = true;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        units_ok = units_ok &&
                   oct_norm(oct_multiply(Octonion::unit(i), Octonion::unit(j))) == 1.0;
    b.check("no unit product vanishes (zero-divisor-freeness on the table)", units_ok);
    double min_ratio = 1e300;
    for (int t = 0; t < 200; ++t) {
      const Octonion a = random_oct();
      const Octonion c = random_oct();
      const double den = oct_norm(a) * oct_norm(c);
      if (den > 1e-12)
        min_ratio = std::min(min_ratio, oct_norm(oct_multiply(a, c)) / den);
    }
    b.check("random products vanish only when a factor does",
            min_ratio > 1.0 - 1e-9, min_ratio);
  }
  {
    const OctonionMatrix id4 = OctonionMatrix::identity(4);
    OctonionMatrix neg_id4(4);
    for (int i = 0; i < 4; ++i) neg_id4(i, i) = Octonion::real(-1.0);
    const int real_idx[4] = {8, 9, 10, 0};
    bool squares_ok = true;
    for (const int mu : real_idx) {
      const OctonionMatrix sq = oct_matrix_product(octonion_gamma(mu), octonion_gamma(mu));
      squares_ok = squares_ok && (mu == 0 ? sq == neg_id4 : sq == id4);
    }
    b.check("real-entried gammas: squares are +1 (8,9,10) and -1 (0), exact",
            squares_ok);
    bool anti_ok = true;
    for (int a = 0; a < 4; ++a)
      for (int c = a + 1; c < 4; ++c) {
        const OctonionMatrix x = octonion_gamma(real_idx[a]);
        const OctonionMatrix y = octonion_gamma(real_idx[c]);
        OctonionMatrix sum = oct_matrix_product(x, y);
        const OctonionMatrix yx = oct_matrix_product(y, x);
        for (std::size_t i = 0; i < sum.e.size(); ++i) sum.e[i] += yx.e[i];
        anti_ok = anti_ok && sum == OctonionMatrix(4);
      }
    b.check("real-entried gammas pairwise anticommute, exact", anti_ok);
    bool full_ok = true;
    for (int mu = 0; mu <= 10; ++mu) {
      const OctonionMatrix sq = oct_matrix_product(octonion_gamma(mu), octonion_gamma(mu));
      full_ok = full_ok && (mu == 0 ? sq == neg_id4 : sq == id4);
      for (int nu = mu + 1; nu <= 10; ++nu) {
        OctonionMatrix sum = oct_matrix_product(octonion_gamma(mu), octonion_gamma(nu));
        const OctonionMatrix yx = oct_matrix_product(octonion_gamma(nu), octonion_gamma(mu));
        for (std::size_t i = 0; i < sum.e.size(); ++i) sum.e[i] += yx.e[i];
        full_ok = full_ok && sum == OctonionMatrix(4);
      }
    }
    b.check("all 11 octonionic gammas: Cl(10,1) relations entrywise, exact", full_ok);
    double assoc = 0.0;
    for (int t = 0; t < 20; ++t) {
      std::vector<Octonion> v(4);
      for (auto& z : v) z = random_oct();
      const auto lhs = oct_matrix_apply(
          oct_matrix_product(octonion_gamma(1 + t % 7), octonion_gamma(8)), v);
      const auto mid = oct_matrix_apply(octonion_gamma(8), v);
      const auto rhs = oct_matrix_apply(octonion_gamma(1 + t % 7), mid);
      for (int i = 0; i < 4; ++i)
        assoc = std::max(assoc, oct_norm(lhs[i] - rhs[i]));
    }
    b.reported("associator residual of (G H) v vs G (H v) on random columns",
               "max residual " + format_double(assoc), assoc);
  }
  {
    const Octonion za = random_oct();
    const Octonion zb = random_oct();
    const OctonionQubitPair entangled{{za, Octonion::zero(), Octonion::zero(), zb}};
    b.check("(za, 0, 0, zb) with both nonzero classifies Entangled",
            oqubit_pattern_check(entangled) == PatternVerdict::Entangled);
    const OctonionQubitPair product{{za, Octonion::zero(), Octonion::zero(),
                                     Octonion::zero()}};
    b.check("(z, 0, 0, 0) classifies PossiblySeparable",
            oqubit_pattern_check(product) == PatternVerdict::PossiblySeparable);
    const OctonionQubitPair anti{{Octonion::zero(), za, zb, Octonion::zero()}};
    b.check("(0, z, z', 0) with both nonzero classifies Entangled",
            oqubit_pattern_check(anti) == PatternVerdict::Entangled);
    bool rejected = false;
    try {
      oqubit_pattern_check(OctonionQubitPair{});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    b.check("the all-zero column is rejected", rejected);
  }
  return b.take();
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  return {"core", "tensor", "rep",  "spinor",    "gates",
          "relativistic", "susy",   "m-algebra", "octonion"};
}

inline Report run_suite(const std::string& name, const VerifyConfig& cfg = {}) {
  if (name == "core") return detail::suite_core(cfg);
  if (name == "tensor") return detail::suite_tensor(cfg);
  if (name == "rep") return detail::suite_rep(cfg);
  if (name == "spinor") return detail::suite_spinor(cfg);
  if (name == "gates") return detail::suite_gates(cfg);
  if (name == "relativistic") return detail::suite_relativistic(cfg);
  if (name == "susy") return detail::suite_susy(cfg);
  if (name == "m-algebra") return detail::suite_malgebra(cfg);
  if (name == "octonion") return detail::suite_octonion(cfg);
  if (name == "all") {
    Report all;
    all.suite = "all";
    for (const auto& sub : suite_names()) {
      Report r = run_suite(sub, cfg);
      for (auto& c : r.checks) {
        c.name = sub + "/" + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.status},
                      {"residual", c.residual},
                      {"details", c.details}});
  return nlohmann::json{{"suite", r.suite},
                        {"checks", checks},
                        {"summary",
                         {{"pass", r.count("pass")},
                          {"fail", r.count("fail")},
                          {"reported", r.count("reported")}}}};
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(),
                        c.at("status").get<std::string>(),
                        c.at("residual").get<double>(),
                        c.at("details").get<std::string>()});
  return r;
}

}  // namespace clq
