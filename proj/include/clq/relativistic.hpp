#pragma once

#include <utility>
#include <vector>

#include "clq/iso.hpp"
#include "clq/spinor.hpp"
#include "clq/tensor.hpp"

namespace clq {

namespace detail {

inline Multivector g13(int i) { return Multivector::generator(Signature::cl13(), i); }
inline Multivector cl13_one() { return Multivector::scalar(Signature::cl13(), 1.0); }
inline Multivector cl13_iota() { return g13(0) * g13(1) * g13(2) * g13(3); }
inline Multivector gamma_pair(int i, int j) { return g13(i) * g13(j); }

}  // namespace detail

/// Gamma5 = gamma3 gamma0 (x) 1 on the two-factor even algebra.
inline TensorElement chirality_op() {
  return tensor_of({detail::gamma_pair(3, 0), detail::cl13_one()});
}

/// P_R = (1(x)1 + Gamma5)/2, P_L = (1(x)1 - Gamma5)/2.
inline std::pair<TensorElement, TensorElement> chiral_projectors() {
  const TensorElement one = TensorElement::identity(chirality_op().factors());
  const TensorElement g5 = chirality_op();
  return {(one + g5) * 0.5, (one - g5) * 0.5};
}

/// Parity: [1 (x) (cos phi + iota sin phi)] [gamma3 gamma0 (x) 1].
inline TensorElement parity_op(double phi) {
  const TensorElement phase =
      tensor_of({detail::cl13_one(),
                 detail::cl13_one() * std::cos(phi) + detail::cl13_iota() * std::sin(phi)});
  return phase * chirality_op();
}

/// Charge conjugation: (-iota (x) 1)(gamma1 gamma0 (x) gamma2 gamma0)
/// = gamma3 gamma0 gamma2 gamma0 (x) gamma2 gamma0.
inline TensorElement charge_conjugation_op() {
  const TensorElement lhs = tensor_of({-detail::cl13_iota(), detail::cl13_one()});
  const TensorElement rhs = tensor_of({detail::gamma_pair(1, 0), detail::gamma_pair(2, 0)});
  return lhs * rhs;
}

/// Time reversal: 1 (x) gamma2 gamma0.
inline TensorElement time_reversal_op() {
  return tensor_of({detail::cl13_one(), detail::gamma_pair(2, 0)});
}

/// Bipartite basis states (gamma_a gamma_0 (x) gamma_b gamma_0) P^{(x)2}
/// for a,b in {3,1}: the algebraic |00>, |01>, |10>, |11>.
inline TensorElement basis_state_cl13(int a, int b) {
  const TensorElement body =
      tensor_of({detail::gamma_pair(a, 0), detail::gamma_pair(b, 0)});
  std::vector<Signature> factors(2, Signature::cl13());
  return body * idempotent_tensor(factors);
}

/// (1/sqrt2)(|00> + |11>) and (1/sqrt2)(|01> + |10>) in algebraic form.
inline TensorElement bell_state_cl13(bool phi_type) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (phi_type) return (basis_state_cl13(3, 3) + basis_state_cl13(1, 1)) * inv_sqrt2;
  return (basis_state_cl13(3, 1) + basis_state_cl13(1, 3)) * inv_sqrt2;
}

/// One operator action: op * input == expected (as states).
struct ActionCase {
  std::string name;
  TensorElement input;
  TensorElement expected;
};

/// The four charge-conjugation actions on the basis states.
inline std::vector<ActionCase> charge_conjugation_action_table() {
  return {
      {"C|00> = |11>", basis_state_cl13(3, 3), basis_state_cl13(1, 1)},
      {"C|11> = -|00>", basis_state_cl13(1, 1), -basis_state_cl13(3, 3)},
      {"C|01> = -|10>", basis_state_cl13(3, 1), -basis_state_cl13(1, 3)},
      {"C|10> = |01>", basis_state_cl13(1, 3), basis_state_cl13(3, 1)},
  };
}

/// The four time-reversal actions, each carrying a (1 (x) iota) phase.
inline std::vector<ActionCase> time_reversal_action_table() {
  const TensorElement iota2 = tensor_of({detail::cl13_one(), detail::cl13_iota()});
  return {
      {"T|00> = (1(x)i)|01>", basis_state_cl13(3, 3), iota2 * basis_state_cl13(3, 1)},
      {"T|11> = -(1(x)i)|10>", basis_state_cl13(1, 1), -(iota2 * basis_state_cl13(1, 3))},
      {"T|01> = -(1(x)i)|00>", basis_state_cl13(3, 1), -(iota2 * basis_state_cl13(3, 3))},
      {"T|10> = (1(x)i)|11>", basis_state_cl13(1, 3), iota2 * basis_state_cl13(1, 1)},
  };
}

/// Bell-state actions of the charge conjugation.
inline std::vector<ActionCase> charge_conjugation_bell_table() {
  const double k = 1.0 / std::sqrt(2.0);
  return {
      {"C Phi+ = (|11> - |00>)/sqrt2", bell_state_cl13(true),
       (basis_state_cl13(1, 1) - basis_state_cl13(3, 3)) * k},
      {"C Psi+ = (|01> - |10>)/sqrt2", bell_state_cl13(false),
       (basis_state_cl13(3, 1) - basis_state_cl13(1, 3)) * k},
  };
}

inline std::vector<ActionCase> time_reversal_bell_table() {
  const TensorElement iota2 = tensor_of({detail::cl13_one(), detail::cl13_iota()});
  const double k = 1.0 / std::sqrt(2.0);
  return {
      {"T Phi+ = (1(x)i)(|01> - |10>)/sqrt2", bell_state_cl13(true),
       iota2 * ((basis_state_cl13(3, 1) - basis_state_cl13(1, 3)) * k)},
      {"T Psi+ = (1(x)i)(|11> - |00>)/sqrt2", bell_state_cl13(false),
       iota2 * ((basis_state_cl13(1, 1) - basis_state_cl13(3, 3)) * k)},
  };
}

}  // namespace clq
