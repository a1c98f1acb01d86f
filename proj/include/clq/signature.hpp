#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clq {

/// Diagonal metric signature of a real Clifford algebra Cl(p,q), together
/// with the naming scheme used by the text form ("e1..e3", "g0..g3").
///
/// The per-index sign table is explicit (neg_mask) rather than derived from
/// (p,q), so Cl(1,3) can place its +1 generator first (gamma0 at index 0).
struct Signature {
  std::uint8_t count = 0;       // number of generators, at most 16
  std::uint16_t neg_mask = 0;   // bit i set => generator i squares to -1
  char prefix = 'e';            // generator letter in the text form
  std::uint8_t index_base = 1;  // text index of generator 0 ("e1" vs "g0")

  static constexpr Signature cl30() { return Signature{3, 0b000, 'e', 1}; }
  // gamma0^2 = +1 first, then gamma1..gamma3 squaring to -1.
  static constexpr Signature cl13() { return Signature{4, 0b1110, 'g', 0}; }

  /// Canonical ordering: the first p generators square to +1.
  static Signature make(int p, int q, char prefix = 'e', int index_base = 1) {
    if (p < 0 || q < 0 || p + q > 16)
      throw std::invalid_argument("Signature: need p,q >= 0 and p+q <= 16");
    const auto neg = static_cast<std::uint16_t>(((1u << q) - 1u) << p);
    return Signature{static_cast<std::uint8_t>(p + q), neg, prefix,
                     static_cast<std::uint8_t>(index_base)};
  }

  constexpr int metric(int i) const { return (neg_mask >> i) & 1u ? -1 : +1; }
  constexpr int p() const { return count - std::popcount(neg_mask); }
  constexpr int q() const { return std::popcount(neg_mask); }

  std::string generator_name(int i) const {
    return prefix + std::to_string(i + index_base);
  }

  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

}  // namespace clq
