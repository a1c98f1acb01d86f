#pragma once

#include <complex>
#include <vector>

#include "clq/iso.hpp"
#include "clq/tensor.hpp"

namespace clq {

/// Dense complex amplitude vector of a pure n-qubit state. The norm may be
/// anything internally; is_unit asserts normalisation within 1e-12.
struct QubitState {
  int n = 0;
  std::vector<Complex> amplitudes;

  QubitState() = default;
  QubitState(int n_, std::vector<Complex> amps) : n(n_), amplitudes(std::move(amps)) {
    if (amplitudes.size() != (std::size_t{1} << n))
      throw std::invalid_argument("QubitState: need 2^n amplitudes");
  }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }
  bool is_unit(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }
};

inline double max_amplitude_distance(const QubitState& a, const QubitState& b) {
  if (a.n != b.n) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    d = std::max(d, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return d;
}

/// eps = (1+sigma3)/2 in Cl(3,0), P = (1+gamma3 gamma0)/2 in Cl(1,3)+.
inline Multivector primitive_idempotent(const Signature& sig) {
  if (sig == Signature::cl30())
    return (Multivector::scalar(sig, 1.0) + Multivector::generator(sig, 2)) * 0.5;
  if (sig == Signature::cl13()) {
    const Multivector g30 =
        Multivector::generator(sig, 3) * Multivector::generator(sig, 0);
    return (Multivector::scalar(sig, 1.0) + g30) * 0.5;
  }
  throw std::invalid_argument("primitive_idempotent: unsupported signature");
}

/// The four real basis elements of the minimal left ideal,
/// {s3 e, s1s2 e, s1 e, s2s3 e} and its gamma image, in the order
/// |0>, i|0>, |1>, i|1>.
inline std::vector<Multivector> ideal_basis(const Signature& sig) {
  const Multivector idem = primitive_idempotent(sig);
  std::vector<Multivector> out;
  if (sig == Signature::cl30()) {
    const auto s = [&](int i) { return Multivector::generator(sig, i); };
    out = {s(2) * idem, s(0) * s(1) * idem, s(0) * idem, s(1) * s(2) * idem};
  } else if (sig == Signature::cl13()) {
    const auto g = [&](int i) { return Multivector::generator(sig, i); };
    const Multivector iota = g(0) * g(1) * g(2) * g(3);
    const Multivector g30 = g(3) * g(0);
    const Multivector g10 = g(1) * g(0);
    out = {g30 * idem, iota * g30 * idem, g10 * idem, iota * g10 * idem};
  } else {
    throw std::invalid_argument("ideal_basis: unsupported signature");
  }
  return out;
}

/// eps^{(x)n} (or P^{(x)n}) for the given factor list.
inline TensorElement idempotent_tensor(const std::vector<Signature>& factors) {
  std::vector<Multivector> parts;
  parts.reserve(factors.size());
  for (const auto& f : factors) parts.push_back(primitive_idempotent(f));
  return tensor_of(parts);
}

/// Element of the minimal left ideal [Cl]^{(x)n} eps^{(x)n}. Construction
/// checks right absorption by the idempotent tensor.
class IdealElement {
 public:
  explicit IdealElement(TensorElement body, double tol = 1e-12) : body_(std::move(body)) {
    const TensorElement absorbed = body_ * idempotent_tensor(body_.factors());
    const double residual = max_coeff_distance(absorbed, body_);
    if (residual > tol)
      throw std::invalid_argument("IdealElement: not absorbed by the idempotent, residual " +
                                  std::to_string(residual));
  }

  const TensorElement& body() const { return body_; }
  int qubit_count() const { return body_.factor_count(); }

 private:
  TensorElement body_;
};

namespace detail {

// Per-blade decode tables: the complex pair a blade contributes to
// (|0>,|1>) inside the ideal. Written out from the representation
// formula's first column, but kept independent of the matrix code path so
// the first-column oracle is a genuine cross-check.
struct AmpPair {
  Complex z0, z1;
};

inline AmpPair decode_blade_cl30(BladeMask m) {
  switch (m) {
    case 0b000: return {{1, 0}, {0, 0}};   // 1
    case 0b001: return {{0, 0}, {1, 0}};   // e1
    case 0b010: return {{0, 0}, {0, 1}};   // e2
    case 0b100: return {{1, 0}, {0, 0}};   // e3
    case 0b011: return {{0, 1}, {0, 0}};   // e12
    case 0b101: return {{0, 0}, {1, 0}};   // e13
    case 0b110: return {{0, 0}, {0, 1}};   // e23
    case 0b111: return {{0, 1}, {0, 0}};   // e123
    default: throw std::logic_error("decode_blade_cl30: bad mask");
  }
}

inline AmpPair decode_blade(const Signature& sig, BladeMask m) {
  if (sig == Signature::cl30()) return decode_blade_cl30(m);
  if (sig == Signature::cl13()) {
    const auto& [pre, sign] = zeta_tables().inverse.at(m);
    AmpPair p = decode_blade_cl30(pre);
    p.z0 *= sign;
    p.z1 *= sign;
    return p;
  }
  throw std::invalid_argument("decode: unsupported factor signature");
}

}  // namespace detail

/// Linear decode of an ideal element to amplitudes: each blade tuple
/// contributes the Kronecker product of its per-factor complex pairs.
/// Agrees with the first column of rep_tensor (tested as an invariant).
inline QubitState decode(const IdealElement& x) {
  const int n = x.qubit_count();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> amps(dim);
  for (const auto& [k, c] : x.body().terms()) {
    // Kronecker expansion of the per-factor pairs.
    std::vector<Complex> acc{Complex(c, 0)};
    for (int i = 0; i < n; ++i) {
      const auto p = detail::decode_blade(x.body().factors()[i], k.m[i]);
      std::vector<Complex> next(acc.size() * 2);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        next[2 * j] = acc[j] * p.z0;
        next[2 * j + 1] = acc[j] * p.z1;
      }
      acc = std::move(next);
    }
    for (std::size_t j = 0; j < dim; ++j) amps[j] += acc[j];
  }
  return QubitState(n, std::move(amps));
}

/// Decode with an explicit ideal-membership check (rejects with residual).
inline QubitState decode_checked(const TensorElement& body, double tol = 1e-12) {
  return decode(IdealElement(body, tol));
}

/// The canonical combination in front of the idempotent tensor: the real
/// part of each amplitude rides on the sigma3/sigma1 slot pattern, the
/// imaginary part on the bivector in the last factor.
inline TensorElement encode_prefactor(const QubitState& state,
                                      const Signature& factor_sig = Signature::cl30()) {
  const int n = state.n;
  if (n < 1) throw std::invalid_argument("encode: need at least one qubit");
  std::vector<Signature> factors(n, factor_sig);

  Multivector s[2] = {Multivector::zero(factor_sig), Multivector::zero(factor_sig)};
  Multivector t[2] = {Multivector::zero(factor_sig), Multivector::zero(factor_sig)};
  if (factor_sig == Signature::cl30()) {
    s[0] = Multivector::generator(factor_sig, 2);                                  // e3
    s[1] = Multivector::generator(factor_sig, 0);                                  // e1
    t[0] = Multivector::generator(factor_sig, 0) * Multivector::generator(factor_sig, 1);
    t[1] = Multivector::generator(factor_sig, 1) * Multivector::generator(factor_sig, 2);
  } else if (factor_sig == Signature::cl13()) {
    const auto g = [&](int i) { return Multivector::generator(factor_sig, i); };
    const Multivector iota = g(0) * g(1) * g(2) * g(3);
    s[0] = g(3) * g(0);
    s[1] = g(1) * g(0);
    t[0] = iota * s[0];
    t[1] = iota * s[1];
  } else {
    throw std::invalid_argument("encode: unsupported factor signature");
  }

  TensorElement sum = TensorElement::zero(factors);
  for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    const Complex amp = state.amplitudes[idx];
    if (amp == Complex{}) continue;
    std::vector<Multivector> re_parts, im_parts;
    for (int i = 0; i < n; ++i) {
      const int bit = (idx >> (n - 1 - i)) & 1;  // first factor = leading qubit
      re_parts.push_back(s[bit]);
      im_parts.push_back(i == n - 1 ? t[bit] : s[bit]);
    }
    if (amp.real() != 0.0) sum += tensor_of(re_parts) * amp.real();
    if (amp.imag() != 0.0) sum += tensor_of(im_parts) * amp.imag();
  }
  return sum;
}

/// Canonical encoding; decode(encode(s)) recovers s (exactly on dyadic
/// amplitudes, to a couple of ulps otherwise).
inline IdealElement encode(const QubitState& state,
                           const Signature& factor_sig = Signature::cl30()) {
  const TensorElement pre = encode_prefactor(state, factor_sig);
  return IdealElement(pre * idempotent_tensor(pre.factors()));
}

/// Left multiplication by a gate element.
inline IdealElement apply_gate(const TensorElement& u, const IdealElement& x) {
  return IdealElement(u * x.body());
}

/// Two ideal elements represent the same state when they decode equally
/// ("equivalent representations of the algebraic state").
inline bool states_equal(const IdealElement& x, const IdealElement& y, double tol = 1e-12) {
  return max_amplitude_distance(decode(x), decode(y)) <= tol;
}

inline bool states_equal(const TensorElement& x, const TensorElement& y, double tol = 1e-12) {
  return states_equal(IdealElement(x), IdealElement(y), tol);
}

/// Bipartite separability: |det| of the 2x2 amplitude matrix below
/// tol * |psi|^2.
inline bool is_separable_bipartite(const IdealElement& x, double tol = 1e-10) {
  if (x.qubit_count() != 2)
    throw std::invalid_argument("is_separable_bipartite: two qubits required");
  const QubitState psi = decode(x);
  const auto& a = psi.amplitudes;
  const Complex det = a[0] * a[3] - a[1] * a[2];
  const double n2 = psi.norm() * psi.norm();
  return std::abs(det) < tol * n2;
}

}  // namespace clq
