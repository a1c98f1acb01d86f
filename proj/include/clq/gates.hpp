#pragma once

#include <string>
#include <vector>

#include "clq/rep.hpp"
#include "clq/tensor.hpp"

namespace clq {

/// Canonical u(2^n) generator basis inside [Cl(3,0)]^{(x)n}: one element
/// per Pauli string, 4^n in total. Every element is anti-hermitian under
/// reverse_all and represents i times its Pauli string.
struct GeneratorBasis {
  int n = 0;
  std::vector<TensorElement> elements;
  std::vector<std::string> labels;  // Pauli strings, e.g. "XZ"
};

namespace detail {

inline Multivector pauli_vector_slot(char p) {
  const Signature s = Signature::cl30();
  switch (p) {
    case 'I': return Multivector::scalar(s, 1.0);
    case 'X': return Multivector::generator(s, 0);
    case 'Y': return Multivector::generator(s, 1);
    case 'Z': return Multivector::generator(s, 2);
    default: throw std::logic_error("pauli_vector_slot: bad label");
  }
}

/// The anti-hermitian carrier supplying the factor of i:
/// X -> s2s3, Y -> s3s1, Z -> s1s2, I -> s1s2s3.
inline Multivector pauli_carrier_slot(char p) {
  const Signature s = Signature::cl30();
  const auto g = [&](int i) { return Multivector::generator(s, i); };
  switch (p) {
    case 'X': return g(1) * g(2);
    case 'Y': return g(2) * g(0);
    case 'Z': return g(0) * g(1);
    case 'I': return g(0) * g(1) * g(2);
    default: throw std::logic_error("pauli_carrier_slot: bad label");
  }
}

}  // namespace detail

/// Basis rule: the carrier bivector sits at the first non-identity slot,
/// plain vectors fill the remaining non-identity slots, 1 elsewhere. The
/// all-identity string places the trivector in the last slot.
inline GeneratorBasis u_generator_basis(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("u_generator_basis: n must be 1..3");
  GeneratorBasis basis;
  basis.n = n;
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const int total = 1 << (2 * n);
  for (int code = 0; code < total; ++code) {
    std::string label(n, 'I');
    for (int i = 0; i < n; ++i) label[i] = letters[(code >> (2 * (n - 1 - i))) & 3];
    std::vector<Multivector> parts;
    int carrier = -1;
    for (int i = 0; i < n; ++i)
      if (label[i] != 'I') {
        carrier = i;
        break;
      }
    for (int i = 0; i < n; ++i) {
      if (carrier == -1)
        parts.push_back(i == n - 1 ? detail::pauli_carrier_slot('I')
                                   : detail::pauli_vector_slot('I'));
      else if (i == carrier)
        parts.push_back(detail::pauli_carrier_slot(label[i]));
      else
        parts.push_back(detail::pauli_vector_slot(label[i]));
    }
    basis.elements.push_back(tensor_of(parts));
    basis.labels.push_back(label);
  }
  return basis;
}

/// X = exp(-pi/2 s1s2s3) exp(pi/2 s2s3) = s1, as a one-factor tensor.
inline TensorElement gate_x_closed_form() {
  return tensor_of({Multivector::generator(Signature::cl30(), 0)});
}

/// CNOT = (1+s3)/2 (x) 1 + (1-s3)/2 (x) s1.
inline TensorElement gate_cnot_closed_form() {
  const Signature s = Signature::cl30();
  const Multivector one = Multivector::scalar(s, 1.0);
  const Multivector s1 = Multivector::generator(s, 0);
  const Multivector s3 = Multivector::generator(s, 2);
  return tensor_of({(one + s3) * 0.5, one}) + tensor_of({(one - s3) * 0.5, s1});
}

/// The exponent whose exponential produces CNOT at theta = pi/2 (together
/// with the exp(alpha s1s2s3 (x) 1) prefactor): squares to -1 (x) 1.
inline TensorElement cnot_exponent_bracket() {
  const Signature s = Signature::cl30();
  const auto g = [&](int i) { return Multivector::generator(s, i); };
  const Multivector one = Multivector::scalar(s, 1.0);
  const Multivector triv = g(0) * g(1) * g(2);
  const Multivector biv = g(0) * g(1);
  TensorElement sum = tensor_of({triv, one});
  sum += tensor_of({biv, one});
  sum += tensor_of({triv, g(0)});
  sum -= tensor_of({biv, g(0)});
  return sum * 0.5;
}

struct SynthesisInfo {
  double residual = 0.0;       // |rep(exp(G)) - target|_F
  bool branch_warning = false; // logm eigenphase at the branch cut
  std::vector<double> coefficients;  // per generator-basis element
};

/// Invert the exponential map: expand logm(target) over the i*Pauli-string
/// basis via normalised trace inner products and lift the coefficients onto
/// the canonical generator basis.
inline TensorElement synthesize(const ComplexMatrix& target, int n,
                                SynthesisInfo* info = nullptr) {
  if (n < 1 || n > 3) throw std::invalid_argument("synthesize: n must be 1..3");
  const int dim = 1 << n;
  if (target.rows != dim || target.cols != dim)
    throw std::invalid_argument("synthesize: target dimension is not 2^n");
  if (unitarity_defect(target) > 1e-10)
    throw std::invalid_argument("synthesize: target is not unitary");
  bool branch = false;
  const ComplexMatrix a = logm_unitary(target, &branch);

  const GeneratorBasis basis = u_generator_basis(n);
  TensorElement g = TensorElement::zero(basis.elements.front().factors());
  std::vector<double> coeffs;
  coeffs.reserve(basis.elements.size());
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    // rep(element) = i P, so the real coefficient is Im tr(P a) / 2^n.
    const ComplexMatrix p = rep_tensor(basis.elements[k]) * Complex(0, -1);
    Complex tr{};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) tr += p(i, j) * a(j, i);
    const double c = tr.imag() / dim;
    coeffs.push_back(c);
    if (std::abs(c) > 0.0) g += basis.elements[k] * c;
  }
  if (info) {
    info->branch_warning = branch;
    info->coefficients = std::move(coeffs);
    info->residual = distance(rep_tensor(exponential_tensor(g)), target);
  }
  return g;
}

/// Standard gate catalog accepted by the CLI.
inline ComplexMatrix gate_matrix(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto m2 = [](Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    return m;
  };
  if (name == "x") return m2(0, 1, 1, 0);
  if (name == "y") return m2(0, Complex(0, -1), Complex(0, 1), 0);
  if (name == "z") return m2(1, 0, 0, -1);
  if (name == "h") return m2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
  if (name == "s") return m2(1, 0, 0, Complex(0, 1));
  if (name == "t") return m2(1, 0, 0, std::polar(1.0, std::acos(-1.0) / 4));
  if (name == "cnot" || name == "swap" || name == "cz") {
    ComplexMatrix m(4, 4);
    if (name == "cnot") {
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    } else if (name == "swap") {
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    } else {
      m(0, 0) = m(1, 1) = m(2, 2) = 1;
      m(3, 3) = -1;
    }
    return m;
  }
  throw std::invalid_argument("gate_matrix: unknown gate '" + name + "'");
}

inline int gate_qubits(const std::string& name) {
  return (name == "cnot" || name == "swap" || name == "cz") ? 2 : 1;
}

/// Exact algebra element of a catalog gate (the element whose rep is the
/// gate matrix). One-qubit gates invert the 2x2 representation formula;
/// the two-qubit gates have standard Pauli expansions.
inline TensorElement gate_algebra_element(const std::string& name) {
  const Signature s = Signature::cl30();
  if (gate_qubits(name) == 1) {
    const ComplexMatrix m = gate_matrix(name);
    const Complex z1 = m(0, 0), z2 = m(0, 1), z3 = m(1, 0), z4 = m(1, 1);
    Multivector::Terms t;
    t[0b000] = 0.5 * (z1.real() + z4.real());
    t[0b100] = 0.5 * (z1.real() - z4.real());
    t[0b011] = 0.5 * (z1.imag() - z4.imag());
    t[0b111] = 0.5 * (z1.imag() + z4.imag());
    t[0b001] = 0.5 * (z2.real() + z3.real());
    t[0b101] = -0.5 * (z2.real() - z3.real());  // e13 carries -sigma3 sigma1
    t[0b110] = 0.5 * (z2.imag() + z3.imag());
    t[0b010] = 0.5 * (z3.imag() - z2.imag());
    return tensor_of({Multivector(s, std::move(t))});
  }
  if (name == "cnot") return gate_cnot_closed_form();
  const Multivector one = Multivector::scalar(s, 1.0);
  const auto g = [&](int i) { return Multivector::generator(s, i); };
  if (name == "swap") {
    TensorElement r = tensor_of({one, one});
    r += tensor_of({g(0), g(0)});
    r += tensor_of({g(1), g(1)});
    r += tensor_of({g(2), g(2)});
    return r * 0.5;
  }
  if (name == "cz") {
    TensorElement r = tensor_of({one, one});
    r += tensor_of({g(2), one});
    r += tensor_of({one, g(2)});
    r -= tensor_of({g(2), g(2)});
    return r * 0.5;
  }
  throw std::invalid_argument("gate_algebra_element: unknown gate '" + name + "'");
}

}  // namespace clq
