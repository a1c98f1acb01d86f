#pragma once

#include <array>
#include <map>

#include "clq/tensor.hpp"

namespace clq {

namespace detail {

struct ZetaTables {
  // cl30 blade -> (cl13 blade, sign), and the inverse.
  std::array<std::pair<BladeMask, int>, 8> forward;
  std::map<BladeMask, std::pair<BladeMask, int>> inverse;
};

/// zeta(sigma_i) = gamma_i gamma_0 extended multiplicatively; every Cl(3,0)
/// basis blade lands on +/- a single even Cl(1,3) blade.
inline const ZetaTables& zeta_tables() {
  static const ZetaTables tables = [] {
    ZetaTables t;
    const Signature s13 = Signature::cl13();
    for (BladeMask m = 0; m < 8; ++m) {
      Multivector img = Multivector::scalar(s13, 1.0);
      for (int i = 0; i < 3; ++i)
        if (m & (1u << i))
          img = img * (Multivector::generator(s13, i + 1) * Multivector::generator(s13, 0));
      if (img.terms().size() != 1)
        throw std::logic_error("zeta image is not a single blade");
      const auto& [mask, coeff] = *img.terms().begin();
      const int sign = coeff > 0 ? +1 : -1;
      t.forward[m] = {mask, sign};
      t.inverse[mask] = {m, sign};
    }
    return t;
  }();
  return tables;
}

}  // namespace detail

/// Algebra isomorphism Cl(3,0) -> Cl(1,3)+, zeta(sigma_i) = gamma_i gamma_0.
inline Multivector iso_zeta(const Multivector& a) {
  if (!(a.signature() == Signature::cl30()))
    throw std::invalid_argument("iso_zeta: Cl(3,0) input required");
  const auto& t = detail::zeta_tables();
  Multivector::Terms out;
  for (const auto& [m, c] : a.terms()) {
    const auto& [img, sign] = t.forward[m];
    out[img] += sign * c;
  }
  return Multivector(Signature::cl13(), std::move(out));
}

/// Inverse isomorphism; rejects odd-grade input.
inline Multivector iso_zeta_inv(const Multivector& a) {
  if (!(a.signature() == Signature::cl13()))
    throw std::invalid_argument("iso_zeta_inv: Cl(1,3) input required");
  if (!a.is_even())
    throw std::invalid_argument("iso_zeta_inv: input has odd-grade terms");
  const auto& t = detail::zeta_tables();
  Multivector::Terms out;
  for (const auto& [m, c] : a.terms()) {
    const auto& [pre, sign] = t.inverse.at(m);
    out[pre] += sign * c;
  }
  return Multivector(Signature::cl30(), std::move(out));
}

namespace detail {

/// Sign of the representation adjoint on a single basis blade: reversion
/// for Cl(3,0), reversion transported through zeta for even Cl(1,3) blades.
/// Equals conjugate transposition in the qubit representation.
inline int rep_adjoint_blade_sign(const Signature& sig, BladeMask mask) {
  if (sig == Signature::cl30())
    return reversion_sign(std::popcount(static_cast<unsigned>(mask)));
  if (sig == Signature::cl13()) {
    if (std::popcount(static_cast<unsigned>(mask)) & 1)
      throw std::invalid_argument("rep_adjoint: odd Cl(1,3) blade has no qubit adjoint");
    const auto& [pre, sign] = zeta_tables().inverse.at(mask);
    (void)sign;  // the two zeta signs cancel; only the Cl(3,0) grade matters
    return reversion_sign(std::popcount(static_cast<unsigned>(pre)));
  }
  throw std::invalid_argument("rep_adjoint: unsupported signature");
}

}  // namespace detail

/// The tilde used by the relativistic operator identities: conjugate
/// transpose in the qubit representation. For Cl(3,0) this is plain
/// reversion; for Cl(1,3)+ it is reversion transported through iso_zeta.
inline Multivector rep_adjoint(const Multivector& a) {
  Multivector::Terms out;
  for (const auto& [m, c] : a.terms())
    out[m] = detail::rep_adjoint_blade_sign(a.signature(), m) * c;
  return Multivector(a.signature(), std::move(out));
}

inline TensorElement rep_adjoint_all(const TensorElement& a) {
  TensorElement::Terms out;
  for (const auto& [k, c] : a.terms()) {
    int sign = 1;
    for (int i = 0; i < k.n; ++i)
      sign *= detail::rep_adjoint_blade_sign(a.factors()[i], k.m[i]);
    out[k] = sign * c;
  }
  return TensorElement(a.factors(), std::move(out));
}

}  // namespace clq
