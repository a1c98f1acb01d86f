// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.
//
// Usage: clq_acceptance [path-to-clq-cli]
// The CLI path is needed for the end-to-end criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clq/gates.hpp"
#include "clq/malgebra.hpp"
#include "clq/octonion.hpp"
#include "clq/random.hpp"
#include "clq/relativistic.hpp"
#include "clq/rep.hpp"
#include "clq/spinor.hpp"
#include "clq/susy.hpp"
#include "clq/text.hpp"
#include "clq/verify.hpp"

using namespace clq;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok,
               const std::string& extra = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              extra.empty() ? "" : " — ", extra.c_str());
  if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string secs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Clifford relation suites, exact; associativity on 1000 seeded triples;
//    runtime < 1 s.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();
  bool ok = true;
  for (int i = 0; i < 3 && ok; ++i)
    for (int j = 0; j < 3 && ok; ++j) {
      const Multivector a = Multivector::generator(s30, i);
      const Multivector b = Multivector::generator(s30, j);
      ok = a * b + b * a == Multivector::scalar(s30, i == j ? 2.0 : 0.0);
    }
  for (int i = 0; i < 4 && ok; ++i)
    for (int j = 0; j < 4 && ok; ++j) {
      const Multivector a = Multivector::generator(s13, i);
      const Multivector b = Multivector::generator(s13, j);
      const double want = i != j ? 0.0 : (i == 0 ? 2.0 : -2.0);
      ok = a * b + b * a == Multivector::scalar(s13, want);
    }
  SeededRng rng(42);
  for (int t = 0; t < 1000 && ok; ++t) {
    const Signature sig = t % 2 ? s13 : s30;
    const Multivector a = rng.multivector(sig, 3);
    const Multivector b = rng.multivector(sig, 3);
    const Multivector c = rng.multivector(sig, 3);
    ok = (a * b) * c == a * (b * c);
  }
  const double dt = seconds_since(t0);
  criterion(1, "Clifford relations exact; associativity on 1000 seeded triples",
            ok && dt < 1.0, "runtime " + secs(dt) + " s < 1 s");
}

// 2. Representation oracle: homomorphism and reversion<->adjoint to 1e-12 on
//    1000 pairs; rep(exp(a)) vs expm(rep(a)) to 1e-10; runtime < 5 s.
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const Signature s30 = Signature::cl30();
  SeededRng rng(42);
  double worst_hom = 0.0, worst_adj = 0.0, worst_exp = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Multivector a = rng.multivector(s30, 4, false);
    const Multivector b = rng.multivector(s30, 4, false);
    worst_hom = std::max(worst_hom, distance(rep_cl30(a * b), rep_cl30(a) * rep_cl30(b)));
    worst_adj = std::max(worst_adj, distance(rep_cl30(reverse(a)), dagger(rep_cl30(a))));
  }
  for (int t = 0; t < 100; ++t) {
    Multivector a = rng.multivector(s30, 4, false);
    const double n = a.norm2();
    if (n > 4.0) a *= 4.0 / n;
    worst_exp = std::max(worst_exp, distance(rep_cl30(exponential(a)), expm(rep_cl30(a))));
  }
  const double dt = seconds_since(t0);
  criterion(2, "representation oracle (hom/adjoint 1e-12, exp vs expm 1e-10)",
            worst_hom <= 1e-12 && worst_adj <= 1e-12 && worst_exp <= 1e-10 && dt < 5.0,
            "hom " + sci(worst_hom) + ", adj " + sci(worst_adj) + ", exp " +
                sci(worst_exp) + ", runtime " + secs(dt) + " s < 5 s");
}

// 3. Gate reproduction: X and CNOT closed forms exact; the four CNOT basis
//    actions exact; synthesis round trip on 50 random unitaries for n=1,2 to
//    1e-8; runtime < 10 s.
void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const Signature s30 = Signature::cl30();
  const double pi = std::acos(-1.0);
  bool ok = exponential(Multivector::blade(s30, 0b111) * (-pi / 2)) *
                exponential(Multivector::blade(s30, 0b110) * (pi / 2)) ==
            Multivector::generator(s30, 0);
  const TensorElement pre =
      tensor_of({Multivector::blade(s30, 0b111), Multivector::scalar(s30, 1.0)});
  ok = ok && exponential_tensor(pre * (-pi / 2)) *
                     exponential_tensor(cnot_exponent_bracket() * (pi / 2)) ==
                 gate_cnot_closed_form();
  const Multivector eps = primitive_idempotent(s30);
  const Multivector e1 = Multivector::generator(s30, 0);
  const Multivector e3 = Multivector::generator(s30, 2);
  const TensorElement cnot = gate_cnot_closed_form();
  const auto st = [&](const Multivector& a, const Multivector& b) {
    return tensor_of({a * eps, b * eps});
  };
  ok = ok && cnot * st(e3, e3) == st(e3, e3) && cnot * st(e3, e1) == st(e3, e1) &&
       cnot * st(e1, e3) == st(e1, e1) && cnot * st(e1, e1) == st(e1, e3);
  SeededRng rng(42);
  double worst = 0.0;
  SynthesisInfo info;
  for (int t = 0; t < 50; ++t) {
    synthesize(rng.unitary(2), 1, &info);
    worst = std::max(worst, info.residual);
  }
  for (int t = 0; t < 50; ++t) {
    synthesize(rng.unitary(4), 2, &info);
    worst = std::max(worst, info.residual);
  }
  const double dt = seconds_since(t0);
  criterion(3, "X/CNOT closed forms and actions exact; synthesis to 1e-8",
            ok && worst <= 1e-8 && dt < 10.0,
            "synthesis residual " + sci(worst) + ", runtime " + secs(dt) +
                " s < 10 s");
}

// 4. Generator-basis counts: ranks 4/16/64 in both senses; u(2) commutator
//    table exact.
void criterion4() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const GeneratorBasis basis = u_generator_basis(n);
    const int want = 1 << (2 * n);
    ok = ok && static_cast<int>(basis.elements.size()) == want;
    ok = ok && rank_of_set(basis.elements) == want;
    std::vector<ComplexMatrix> images;
    for (const auto& e : basis.elements) images.push_back(rep_tensor(e));
    ok = ok && rank_c(images) == want;
  }
  const Signature s30 = Signature::cl30();
  const auto g = [&](int i) { return Multivector::generator(s30, i); };
  const Multivector s12 = g(0) * g(1), s23 = g(1) * g(2), s31 = g(2) * g(0);
  const Multivector triv = g(0) * g(1) * g(2);
  const auto comm = [](const Multivector& x, const Multivector& y) {
    return x * y - y * x;
  };
  ok = ok && comm(s12, s23) == s31 * -2.0 && comm(s12, s31) == s23 * 2.0 &&
       comm(s23, s31) == s12 * -2.0 && comm(s12, triv).is_zero() &&
       comm(s23, triv).is_zero() && comm(s31, triv).is_zero();
  criterion(4, "u(2^n) ranks 4/16/64 (tensor and rep) and the commutator table", ok);
}

// 5. Relativistic action tables and chiral separability.
void criterion5() {
  const Signature s13 = Signature::cl13();
  const std::vector<Signature> f13{s13, s13};
  const auto g = [&](int i) { return Multivector::generator(s13, i); };
  const Multivector iota = g(0) * g(1) * g(2) * g(3);
  bool ok = true;
  // Gamma5 / projector actions on the two alpha blocks
  SeededRng rng(42);
  const Multivector seconds[4] = {g(3) * g(0), iota * (g(3) * g(0)), g(1) * g(0),
                                  iota * (g(1) * g(0))};
  const auto bipartite = [&](const double alpha[8]) {
    TensorElement psi = TensorElement::zero(f13);
    for (int k = 0; k < 8; ++k)
      psi += tensor_of({k < 4 ? g(3) * g(0) : g(1) * g(0), seconds[k % 4]}) * alpha[k];
    return psi * idempotent_tensor(f13);
  };
  double alpha[8];
  for (double& a : alpha) a = rng.dyadic();
  double ar[8] = {alpha[0], alpha[1], alpha[2], alpha[3], 0, 0, 0, 0};
  double al[8] = {0, 0, 0, 0, alpha[4], alpha[5], alpha[6], alpha[7]};
  const auto [pr, pl] = chiral_projectors();
  ok = ok && pr * bipartite(alpha) == bipartite(ar) &&
       pl * bipartite(alpha) == bipartite(al) &&
       chirality_op() * bipartite(ar) == bipartite(ar) &&
       chirality_op() * bipartite(al) == -bipartite(al);
  // parity at phi = 0 and a random phi
  for (const double phi : {0.0, rng.uniform(0.1, 3.0)}) {
    double flipped[8];
    for (int k = 0; k < 8; ++k) flipped[k] = k < 4 ? alpha[k] : -alpha[k];
    const TensorElement phase = tensor_of(
        {Multivector::scalar(s13, 1.0),
         Multivector::scalar(s13, 1.0) * std::cos(phi) + iota * std::sin(phi)});
    ok = ok && max_coeff_distance(parity_op(phi) * bipartite(alpha),
                                  phase * bipartite(flipped)) <= 1e-12;
  }
  // C and T tables (basis states and Bell combinations, 1/sqrt2 to 1e-12)
  const TensorElement c = charge_conjugation_op();
  for (const auto& cse : charge_conjugation_action_table())
    ok = ok && states_equal(c * cse.input, cse.expected, 1e-12);
  for (const auto& cse : charge_conjugation_bell_table())
    ok = ok && states_equal(c * cse.input, cse.expected, 1e-12);
  const TensorElement t = time_reversal_op();
  for (const auto& cse : time_reversal_action_table())
    ok = ok && states_equal(t * cse.input, cse.expected, 1e-12);
  for (const auto& cse : time_reversal_bell_table())
    ok = ok && states_equal(t * cse.input, cse.expected, 1e-12);
  // 200 random chiral projections separable at 1e-10
  for (int k = 0; k < 200 && ok; ++k) {
    const IdealElement psi = encode(rng.state(2), s13);
    for (const TensorElement* proj : {&pr, &pl}) {
      const TensorElement projected = *proj * psi.body();
      if (projected.is_zero()) continue;
      ok = ok && is_separable_bipartite(IdealElement(projected), 1e-10);
    }
  }
  criterion(5, "Gamma5/P^{R,L}/parity/C/T action tables and chiral separability", ok);
}

// 6. SUSY: bracket table, theta matrices, C_hat rep and Bell actions.
void criterion6() {
  const Signature s13 = Signature::cl13();
  const ThetaElements th = theta_elements();
  const Multivector* thetas[2] = {&th.theta1, &th.theta2};
  const Multivector* bars[2] = {&th.theta1_bar, &th.theta2_bar};
  bool ok = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Multivector want = Multivector::scalar(s13, a == b ? 2.0 : 0.0);
      ok = ok && susy_bracket(*thetas[a], *bars[b]) == want &&
           susy_bracket(*bars[b], *thetas[a]) == want &&
           susy_bracket(*thetas[a], *thetas[b]) == susy_bracket(*bars[a], *bars[b]);
    }
  for (const auto& cse : theta_action_table())
    ok = ok && cse.op * cse.input * 0.5 == cse.expected;
  const auto mats = theta_matrix_rep();
  const double want[4][2][2] = {
      {{2, 0}, {0, 0}}, {{0, 0}, {0, 2}}, {{0, 0}, {2, 0}}, {{0, -2}, {0, 0}}};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ok = ok && mats[k](i, j) == Complex(want[k][i][j], 0.0);
  const TensorElement chat = charge_conj_hat();
  ok = ok && distance(transpose(rep_tensor(chat)),
                      charge_conj_hat_reference_matrix()) == 0.0;
  ok = ok && reverse_all(chat) == -chat;
  for (const auto& cse : charge_conj_hat_bell_table())
    ok = ok && states_equal(chat * cse.input, cse.expected, 1e-12);
  criterion(6, "theta bracket table, theta matrices, C_hat matrix and Bell actions",
            ok);
}

// 7. M-algebra: cl07/cl101 relations exact, counts and rank 528; the
//    basis-dependent rep checks run and are reported. Runtime < 30 s.
void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const MAlgebraReport rep = verify_m_algebra();
  bool ok = rep.cl07_check.relations_hold &&
            rep.cl07_check.measured_signature == std::vector<int>(7, -1);
  int plus = 0, minus = 0;
  for (const int v : rep.cl101_check.measured_signature) (v > 0 ? plus : minus)++;
  ok = ok && rep.cl101_check.relations_hold && plus == 10 && minus == 1;
  ok = ok && rep.count1 == 11 && rep.count2 == 55 && rep.count5 == 462 &&
       rep.total == 528 && rep.tensor_rank == 528;
  const double dt = seconds_since(t0);
  std::string reported = "reported: xi ";
  reported += rep.xi_uniform ? std::to_string(rep.xi_value) : std::string("non-uniform");
  reported += ", alpha " + std::to_string(rep.alpha) + ", symmetric " +
              std::to_string(rep.symmetric_count) + "/528, rep rank " +
              std::to_string(rep.rep_rank);
  criterion(7, "M-algebra: cl07/cl101 exact, counts 11/55/462, rank 528",
            ok && dt < 30.0,
            reported + ", runtime " + secs(dt) + " s < 30 s");
}

// 8. Octonions: norm multiplicativity 1e-10, alternativity 1e-12, the
//    entangled pattern, and the real-entried gamma anticommutation.
void criterion8() {
  SeededRng rng(42);
  const auto random_oct = [&] {
    std::array<double, 8> c;
    for (double& x : c) x = rng.uniform(-1.0, 1.0);
    return Octonion(c);
  };
  bool ok = true;
  double worst_norm = 0.0, worst_alt = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = random_oct();
    const Octonion b = random_oct();
    const double rhs = oct_norm(a) * oct_norm(b);
    worst_norm =
        std::max(worst_norm, std::abs(oct_norm(oct_multiply(a, b)) - rhs) /
                                 std::max(1.0, rhs));
    worst_alt = std::max(worst_alt, oct_norm(oct_multiply(a, oct_multiply(a, b)) -
                                             oct_multiply(oct_multiply(a, a), b)));
  }
  ok = ok && worst_norm <= 1e-10 && worst_alt <= 1e-12;
  ok = ok && oqubit_pattern_check({{random_oct(), Octonion::zero(), Octonion::zero(),
                                    random_oct()}}) == PatternVerdict::Entangled;
  const OctonionMatrix id4 = OctonionMatrix::identity(4);
  OctonionMatrix neg_id4(4);
  for (int i = 0; i < 4; ++i) neg_id4(i, i) = Octonion::real(-1.0);
  const int real_idx[4] = {8, 9, 10, 0};
  for (int a = 0; a < 4 && ok; ++a) {
    const OctonionMatrix sq =
        oct_matrix_product(octonion_gamma(real_idx[a]), octonion_gamma(real_idx[a]));
    ok = ok && (real_idx[a] == 0 ? sq == neg_id4 : sq == id4);
    for (int b = a + 1; b < 4 && ok; ++b) {
      OctonionMatrix anti = oct_matrix_product(octonion_gamma(real_idx[a]),
                                               octonion_gamma(real_idx[b]));
      const OctonionMatrix yx = oct_matrix_product(octonion_gamma(real_idx[b]),
                                                   octonion_gamma(real_idx[a]));
      for (std::size_t i = 0; i < anti.e.size(); ++i) anti.e[i] += yx.e[i];
      ok = ok && anti == OctonionMatrix(4);
    }
  }
  criterion(8, "octonions: norms, alternativity, entangled pattern, gamma relations",
            ok,
            "norm residual " + sci(worst_norm) + ", alternativity " + sci(worst_alt));
}

// 9. End-to-end: `verify --suite all --seed 42` exits 0 in under 120 s and
//    reruns byte-identically.
void criterion9(const char* cli_path) {
  if (!cli_path) {
    criterion(9, "end-to-end CLI run", false, "no CLI path given");
    return;
  }
  const std::string base = "clq_acceptance_report";
  const std::string cmd1 = std::string(cli_path) +
                           " verify --suite all --seed 42 --json " + base +
                           "1.json > /dev/null";
  const std::string cmd2 = std::string(cli_path) +
                           " verify --suite all --seed 42 --json " + base +
                           "2.json > /dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  const int rc1 = std::system(cmd1.c_str());
  const double dt = seconds_since(t0);
  const int rc2 = std::system(cmd2.c_str());
  const std::string r1 = read_file(base + "1.json");
  const std::string r2 = read_file(base + "2.json");
  const bool ok = rc1 == 0 && rc2 == 0 && dt < 120.0 && !r1.empty() && r1 == r2;
  criterion(9, "verify --suite all --seed 42: exit 0, byte-identical rerun",
            ok, "runtime " + secs(dt) + " s < 120 s");
  std::remove((base + "1.json").c_str());
  std::remove((base + "2.json").c_str());
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(argc > 1 ? argv[1] : nullptr);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 9 acceptance criteria PASS\n");
  return failures;
}
