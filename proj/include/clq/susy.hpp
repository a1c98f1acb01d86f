#pragma once

#include <array>

#include "clq/relativistic.hpp"
#include "clq/spinor.hpp"

namespace clq {

/// The algebraic stand-ins for the Grassmann variables:
/// theta1 = 1 + g3g0, theta1_bar = 1 - g3g0,
/// theta2 = g1g0 + iota g2g0, theta2_bar = -g1g0 + iota g2g0.
struct ThetaElements {
  Multivector theta1, theta1_bar, theta2, theta2_bar;
};

inline ThetaElements theta_elements() {
  using detail::cl13_iota;
  using detail::cl13_one;
  using detail::gamma_pair;
  const Multivector g30 = gamma_pair(3, 0);
  const Multivector g10 = gamma_pair(1, 0);
  const Multivector ig20 = cl13_iota() * gamma_pair(2, 0);
  return {cl13_one() + g30, cl13_one() - g30, g10 + ig20, -g10 + ig20};
}

/// 2x2 matrices of the theta operators on the ideal basis
/// {gamma3 gamma0 P, gamma1 gamma0 P}, in the row-action
/// convention: entry (i,j) is the coefficient of basis_j in theta * basis_i.
/// Entries are checked to be real; the action must stay inside the ideal.
inline std::array<ComplexMatrix, 4> theta_matrix_rep() {
  const Signature sig = Signature::cl13();
  const Multivector idem = primitive_idempotent(sig);
  const Multivector b[2] = {detail::gamma_pair(3, 0) * idem,
                            detail::gamma_pair(1, 0) * idem};
  const ThetaElements th = theta_elements();
  const Multivector* ops[4] = {&th.theta1, &th.theta1_bar, &th.theta2, &th.theta2_bar};
  std::array<ComplexMatrix, 4> out{ComplexMatrix(2, 2), ComplexMatrix(2, 2),
                                   ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
  for (int o = 0; o < 4; ++o) {
    for (int i = 0; i < 2; ++i) {
      const Multivector image = (*ops[o]) * b[i];
      const QubitState amps = decode(IdealElement(tensor_of({image})));
      for (int j = 0; j < 2; ++j) {
        const Complex z = amps.amplitudes[j];
        if (std::abs(z.imag()) > 1e-12)
          throw std::logic_error("theta_matrix_rep: action left the real ideal basis");
        out[o](i, j) = z.real();
      }
    }
  }
  return out;
}

/// SUSY charge conjugation on two factors: -(1 (x) iota)(g2g0 (x) 1),
/// anti-self-adjoint (rep_adjoint_all and reverse_all both give -C_hat).
inline TensorElement charge_conj_hat() {
  const TensorElement lhs = tensor_of({detail::cl13_one(), -detail::cl13_iota()});
  const TensorElement rhs =
      tensor_of({detail::gamma_pair(2, 0), detail::cl13_one()});
  return lhs * rhs;
}

/// Bell actions of charge_conj_hat.
inline std::vector<ActionCase> charge_conj_hat_bell_table() {
  const double k = 1.0 / std::sqrt(2.0);
  return {
      {"Chat Phi+ = (|10> - |01>)/sqrt2", bell_state_cl13(true),
       (basis_state_cl13(1, 3) - basis_state_cl13(3, 1)) * k},
      {"Chat Psi+ = (|11> - |00>)/sqrt2", bell_state_cl13(false),
       (basis_state_cl13(1, 1) - basis_state_cl13(3, 3)) * k},
  };
}

/// The reference 4x4 charge-conjugation matrix (same row-action convention
/// as the theta matrices: it equals transpose(rep_tensor(charge_conj_hat))).
inline ComplexMatrix charge_conj_hat_reference_matrix() {
  ComplexMatrix m(4, 4);
  m(0, 2) = 1;
  m(1, 3) = 1;
  m(2, 0) = -1;
  m(3, 1) = -1;
  return m;
}

/// The eight theta actions on the base elements
/// (gamma3 gamma0 P and gamma1 gamma0 P), as (op/2) * input == expected.
struct ThetaActionCase {
  std::string name;
  Multivector op;       // applied with a 1/2 prefactor
  Multivector input;
  Multivector expected;
};

inline std::vector<ThetaActionCase> theta_action_table() {
  const Signature sig = Signature::cl13();
  const Multivector idem = primitive_idempotent(sig);
  const Multivector b0 = detail::gamma_pair(3, 0) * idem;  // gamma3 gamma0 P
  const Multivector b1 = detail::gamma_pair(1, 0) * idem;  // gamma1 gamma0 P
  const Multivector zero = Multivector::zero(sig);
  const ThetaElements th = theta_elements();
  return {
      {"theta1/2 b0 = b0", th.theta1, b0, b0},
      {"theta1_bar/2 b0 = 0", th.theta1_bar, b0, zero},
      {"theta2/2 b0 = 0", th.theta2, b0, zero},
      {"theta2_bar/2 b0 = -b1", th.theta2_bar, b0, -b1},
      {"theta1/2 b1 = 0", th.theta1, b1, zero},
      {"theta1_bar/2 b1 = b1", th.theta1_bar, b1, b1},
      {"theta2/2 b1 = b0", th.theta2, b1, b0},
      {"theta2_bar/2 b1 = 0", th.theta2_bar, b1, zero},
  };
}

}  // namespace clq
