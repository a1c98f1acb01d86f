#pragma once

#include "clq/iso.hpp"
#include "clq/matrix.hpp"
#include "clq/tensor.hpp"

namespace clq {

/// Pauli-type 2x2 representation of Cl(3,0). With the general element
/// a0 + a1 s1 + a2 s2 + a3 s3 + a12 s1s2 + a23 s2s3 + a31 s3s1 + a123 s1s2s3
/// the matrix is
///   [ (a0+a3) + i(a12+a123)   (a1+a31) + i(a23-a2) ]
///   [ (a1-a31) + i(a23+a2)    (a0-a3) + i(a123-a12) ].
/// Real-algebra homomorphism; reversion corresponds to conjugate transpose.
inline ComplexMatrix rep_cl30(const Multivector& a) {
  if (!(a.signature() == Signature::cl30()))
    throw std::invalid_argument("rep_cl30: Cl(3,0) input required");
  // Blades are e1=bit0, e2=bit1, e3=bit2. The canonical e13 blade carries
  // sigma1 sigma3 = -sigma3 sigma1, hence a31 = -coeff(e13).
  const double a0 = a.coeff(0b000);
  const double a1 = a.coeff(0b001);
  const double a2 = a.coeff(0b010);
  const double a3 = a.coeff(0b100);
  const double a12 = a.coeff(0b011);
  const double a23 = a.coeff(0b110);
  const double a31 = -a.coeff(0b101);
  const double a123 = a.coeff(0b111);
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(a0 + a3, a12 + a123);
  m(0, 1) = Complex(a1 + a31, a23 - a2);
  m(1, 0) = Complex(a1 - a31, a23 + a2);
  m(1, 1) = Complex(a0 - a3, a123 - a12);
  return m;
}

/// Representation of an even Cl(1,3) element, pulled back through iso_zeta.
inline ComplexMatrix rep_cl13_even(const Multivector& a) {
  return rep_cl30(iso_zeta_inv(a));
}

namespace detail {

inline ComplexMatrix rep_factor_blade(const Signature& sig, BladeMask mask) {
  if (sig == Signature::cl30())
    return rep_cl30(Multivector::blade(Signature::cl30(), mask));
  if (sig == Signature::cl13())
    return rep_cl13_even(Multivector::blade(Signature::cl13(), mask));
  throw std::invalid_argument("rep_tensor: unsupported factor signature");
}

}  // namespace detail

/// Kronecker lift of the factor representations, extended linearly.
/// Cl(1,3)+ factors are pulled back through iso_zeta first.
inline ComplexMatrix rep_tensor(const TensorElement& a) {
  const int n = a.factor_count();
  const int dim = 1 << n;
  ComplexMatrix out(dim, dim);
  for (const auto& [k, c] : a.terms()) {
    ComplexMatrix m = detail::rep_factor_blade(a.factors()[0], k.m[0]);
    for (int i = 1; i < n; ++i)
      m = kron(m, detail::rep_factor_blade(a.factors()[i], k.m[i]));
    m *= Complex(c, 0.0);
    out += m;
  }
  return out;
}

}  // namespace clq
