// clq command-line tool: verification suites, gate synthesis/application,
// state encoding, and the relativistic operators.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clq/gates.hpp"
#include "clq/relativistic.hpp"
#include "clq/spinor.hpp"
#include "clq/text.hpp"
#include "clq/verify.hpp"

namespace {

constexpr const char* kOtimes = "\xE2\x8A\x97";
constexpr const char* kEps = "\xCE\xB5";

int run_verify(const std::string& suite, const std::optional<std::string>& json_path,
               std::uint64_t seed, const std::optional<double>& tol) {
  clq::VerifyConfig cfg;
  cfg.seed = seed;
  cfg.tol_override = tol;
  const auto start = std::chrono::steady_clock::now();
  clq::Report report;
  try {
    report = clq::run_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& c : report.checks) {
    if (c.status == "pass")
      std::cout << "[pass]     " << c.name << "\n";
    else if (c.status == "fail")
      std::cout << "[FAIL]     " << c.name << "  (residual " << c.residual << ")\n";
    else
      std::cout << "[reported] " << c.name << ": " << c.details << "\n";
  }
  std::cout << report.suite << ": " << report.count("pass") << " pass, "
            << report.count("fail") << " fail, " << report.count("reported")
            << " reported  [" << elapsed << " s]\n";
  if (json_path) {
    std::ofstream out(*json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *json_path << "\n";
      return 2;
    }
    out << clq::report_to_json(report).dump(2) << "\n";
  }
  return report.ok() ? 0 : 1;
}

/// Infer factor signatures from a tensor text: the generator letter picks
/// the algebra, the separators in the first monomial give the arity.
std::vector<clq::Signature> infer_factors(const std::string& text) {
  clq::Signature sig = clq::Signature::cl30();
  for (char ch : text)
    if (ch == 'g') {
      sig = clq::Signature::cl13();
      break;
    }
  int count = 1;
  std::size_t pos = 0;
  const std::size_t term_end = std::min(text.find('+', 1), text.find('-', 1));
  const std::string head = text.substr(0, term_end);
  while ((pos = head.find(kOtimes, pos)) != std::string::npos) {
    ++count;
    pos += 3;
  }
  pos = 0;
  if (count == 1)
    while ((pos = head.find("(x)", pos)) != std::string::npos) {
      ++count;
      pos += 3;
    }
  return std::vector<clq::Signature>(count, sig);
}

std::string state_text(const clq::TensorElement& prefactor) {
  std::string s = "[" + clq::format_tensor(prefactor) + "] ";
  for (int i = 0; i < prefactor.factor_count(); ++i) {
    if (i) s += kOtimes;
    s += kEps;
  }
  return s;
}

int run_state(const std::string& action, const std::string& payload) {
  if (action == "encode") {
    const auto amps = clq::parse_amplitudes(payload);
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if ((std::size_t{1} << n) != amps.size())
      throw std::invalid_argument("amplitude count must be a power of two");
    const clq::QubitState psi(n, amps);
    std::cout << state_text(clq::encode_prefactor(psi)) << "\n";
    return 0;
  }
  // decode: either "[prefactor] eps(x)..." or a bare element of the ideal
  std::string body = payload;
  bool has_marker = false;
  if (!body.empty() && body.front() == '[') {
    const std::size_t close = body.find(']');
    if (close == std::string::npos)
      throw clq::ParseError("unterminated '['", 0);
    has_marker = true;
    body = body.substr(1, close - 1);
  }
  const auto factors = infer_factors(body);
  clq::TensorElement elem = clq::parse_tensor(body, factors);
  if (has_marker) elem = elem * clq::idempotent_tensor(factors);
  const clq::QubitState psi = clq::decode_checked(elem);
  std::cout << clq::format_amplitudes(psi.amplitudes) << "\n";
  return 0;
}

int run_gate(const std::string& action, const std::string& name,
             const std::string& state) {
  const int n = clq::gate_qubits(name);
  if (action == "synth") {
    const clq::TensorElement element = clq::gate_algebra_element(name);
    clq::SynthesisInfo info;
    clq::synthesize(clq::gate_matrix(name), n, &info);
    const clq::GeneratorBasis basis = clq::u_generator_basis(n);
    std::cout << "element:  " << clq::format_tensor(element) << "\n";
    std::cout << "exponent:";
    bool any = false;
    for (std::size_t k = 0; k < info.coefficients.size(); ++k) {
      if (std::abs(info.coefficients[k]) < 1e-12) continue;
      std::cout << (any ? " + " : "  ") << clq::detail::format_double(info.coefficients[k])
                << "*[" << basis.labels[k] << "]";
      any = true;
    }
    if (!any) std::cout << "  0";
    std::cout << "\n";
    std::cout << "residual: " << info.residual
              << (info.branch_warning ? "  (branch warning: eigenphase at -pi)" : "")
              << "\n";
    return 0;
  }
  const auto amps = clq::parse_amplitudes(state);
  if (amps.size() != (std::size_t{1} << n))
    throw std::invalid_argument("gate '" + name + "' needs " +
                                std::to_string(std::size_t{1} << n) + " amplitudes");
  const clq::IdealElement x = clq::encode(clq::QubitState(n, amps));
  const clq::IdealElement y = clq::apply_gate(clq::gate_algebra_element(name), x);
  std::cout << clq::format_amplitudes(clq::decode(y).amplitudes) << "\n";
  return 0;
}

int run_op(const std::string& name, double phi, const std::string& state) {
  const auto amps = clq::parse_amplitudes(state);
  if (amps.size() != 4)
    throw std::invalid_argument("relativistic operators act on two-qubit states "
                                "(4 amplitudes)");
  clq::TensorElement op = clq::chirality_op();
  if (name == "chirality")
    op = clq::chirality_op();
  else if (name == "parity")
    op = clq::parity_op(phi);
  else if (name == "cconj")
    op = clq::charge_conjugation_op();
  else if (name == "timerev")
    op = clq::time_reversal_op();
  else
    throw std::invalid_argument("unknown operator '" + name + "'");
  const clq::IdealElement x =
      clq::encode(clq::QubitState(2, amps), clq::Signature::cl13());
  const clq::IdealElement y = clq::apply_gate(op, x);
  std::cout << clq::format_amplitudes(clq::decode(y).amplitudes) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-algebra qubit kernel and verification suites"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::optional<std::string> json_path;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  verify->add_option("--suite", suite,
                     "core|tensor|rep|spinor|gates|relativistic|susy|m-algebra|"
                     "octonion|all");
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--seed", seed, "seed for the randomized property checks");
  verify->add_option("--tol", tol, "override the per-check tolerances");

  // gate synth|apply
  auto* gate = app.add_subcommand("gate", "synthesise or apply a catalog gate");
  gate->require_subcommand(1);
  std::string gate_name, gate_state;
  auto* synth = gate->add_subcommand("synth", "print the algebra element of a gate");
  synth->add_option("--name", gate_name, "x|y|z|h|s|t|cnot|swap|cz")->required();
  auto* apply = gate->add_subcommand("apply", "apply a gate to encoded amplitudes");
  apply->add_option("--name", gate_name, "x|y|z|h|s|t|cnot|swap|cz")->required();
  apply->add_option("--state", gate_state, "amplitudes re,im;re,im;...")->required();

  // state encode|decode
  auto* state = app.add_subcommand("state", "encode/decode algebraic spinor states");
  state->require_subcommand(1);
  std::string state_payload;
  auto* enc = state->add_subcommand("encode", "amplitudes -> ideal element text");
  enc->add_option("payload", state_payload, "amplitudes re,im;re,im;...")->required();
  auto* dec = state->add_subcommand("decode", "ideal element text -> amplitudes");
  dec->add_option("payload", state_payload, "\"[element] eps...\" or a bare element")
      ->required();

  // op apply
  auto* op = app.add_subcommand("op", "relativistic operators on two-qubit states");
  op->require_subcommand(1);
  std::string op_name;
  double op_phi = 0.0;
  std::string op_state;
  auto* op_apply = op->add_subcommand("apply", "apply an operator");
  op_apply->add_option("--name", op_name, "chirality|parity|cconj|timerev")->required();
  op_apply->add_option("--phi", op_phi, "parity phase in radians");
  op_apply->add_option("--state", op_state, "amplitudes re,im;re,im;re,im;re,im")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(suite, json_path, seed, tol);
    if (*gate) return run_gate(synth->parsed() ? "synth" : "apply", gate_name, gate_state);
    if (*state) return run_state(enc->parsed() ? "encode" : "decode", state_payload);
    if (*op) return run_op(op_name, op_phi, op_state);
  } catch (const clq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
