#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "clq/signature.hpp"

namespace clq {

using Complex = std::complex<double>;

/// Basis blades are index sets stored as bitmasks; bit i = generator i.
/// The empty mask is the scalar unit.
using BladeMask = std::uint16_t;

/// Coefficients below this magnitude are dropped after arithmetic. Chosen
/// well below every constant appearing in the identity suites, and large
/// enough to swallow cos(pi/2)-sized floating point residue (~6e-17).
inline constexpr double kCoeffPrune = 1e-14;

namespace detail {

/// Sign of the product of two basis blades: parity of the transpositions
/// needed to interleave the generator strings, times the metric signs of
/// the repeated generators.
inline int blade_product_sign(BladeMask a, BladeMask b, std::uint16_t neg_mask) {
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(static_cast<unsigned>(t & b));
  int sign = (swaps & 1) ? -1 : +1;
  if (std::popcount(static_cast<unsigned>(a & b & neg_mask)) & 1) sign = -sign;
  return sign;
}

/// (-1)^{k(k-1)/2} for a grade-k blade.
inline int reversion_sign(int grade) { return (grade * (grade - 1) / 2) % 2 ? -1 : +1; }

}  // namespace detail

/// Sparse real element of Cl(p,q): map from basis blade to coefficient.
/// Immutable in spirit; every operation returns a fresh value.
class Multivector {
 public:
  using Terms = std::map<BladeMask, double>;

  explicit Multivector(Signature sig) : sig_(sig) {}
  Multivector(Signature sig, Terms terms) : sig_(sig), terms_(std::move(terms)) { prune(); }

  static Multivector zero(Signature sig) { return Multivector(sig); }
  static Multivector scalar(Signature sig, double v) { return blade(sig, 0, v); }
  static Multivector blade(Signature sig, BladeMask mask, double coeff = 1.0) {
    Multivector m(sig);
    if (mask >> sig.count)
      throw std::invalid_argument("Multivector: blade index out of range for signature");
    m.terms_[mask] = coeff;
    m.prune();
    return m;
  }
  static Multivector generator(Signature sig, int i) {
    return blade(sig, static_cast<BladeMask>(1u << i));
  }

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double coeff(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
  }
  double scalar_part() const { return coeff(0); }

  /// True when every stored blade has even grade.
  bool is_even() const {
    for (const auto& [mask, c] : terms_)
      if (std::popcount(static_cast<unsigned>(mask)) & 1) return false;
    return true;
  }

  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_signature(o);
    for (const auto& [m, c] : o.terms_) terms_[m] += c;
    prune();
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same_signature(o);
    for (const auto& [m, c] : o.terms_) terms_[m] -= c;
    prune();
    return *this;
  }
  Multivector& operator*=(double s) {
    for (auto& [m, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same_signature(b);
    Multivector r(a.sig_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        const int sign = detail::blade_product_sign(ma, mb, a.sig_.neg_mask);
        r.terms_[ma ^ mb] += sign * ca * cb;
      }
    r.prune();
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Largest absolute coefficient difference; infinity on signature mismatch.
  friend double max_coeff_distance(const Multivector& a, const Multivector& b) {
    if (!(a.sig_ == b.sig_)) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (const auto& [m, c] : a.terms_) d = std::max(d, std::abs(c - b.coeff(m)));
    for (const auto& [m, c] : b.terms_) d = std::max(d, std::abs(c - a.coeff(m)));
    return d;
  }

  double norm1() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += std::abs(c);
    return s;
  }
  double norm2() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += c * c;
    return std::sqrt(s);
  }

 private:
  void require_same_signature(const Multivector& o) const {
    if (!(sig_ == o.sig_))
      throw std::invalid_argument("Multivector: operands live in different algebras");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= kCoeffPrune)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Signature sig_;
  Terms terms_;
};

/// Reversion: grade-k part scaled by (-1)^{k(k-1)/2}. Involutive
/// anti-automorphism: reverse(a*b) = reverse(b)*reverse(a).
inline Multivector reverse(const Multivector& a) {
  Multivector::Terms t;
  for (const auto& [m, c] : a.terms())
    t[m] = detail::reversion_sign(std::popcount(static_cast<unsigned>(m))) * c;
  return Multivector(a.signature(), std::move(t));
}

inline Multivector grade_project(const Multivector& a, int k) {
  Multivector::Terms t;
  for (const auto& [m, c] : a.terms())
    if (std::popcount(static_cast<unsigned>(m)) == k) t[m] = c;
  return Multivector(a.signature(), std::move(t));
}

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_coeff_distance(a, b) <= tol;
}

/// exp(a). When a*a is a scalar lambda the closed trigonometric/hyperbolic
/// form applies; otherwise a scaled-and-squared power series is used (the
/// coefficient 1-norm is submultiplicative for blade arithmetic, so the
/// remainder bound is rigorous). Throws on non-convergence.
inline Multivector exponential(const Multivector& a, double tol = 1e-12) {
  const Signature sig = a.signature();
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector sq = a * a;
  if (sq.is_scalar()) {
    const double lam = sq.scalar_part();
    if (lam == 0.0) return one + a;
    const double w = std::sqrt(std::abs(lam));
    if (lam < 0.0) return one * std::cos(w) + a * (std::sin(w) / w);
    return one * std::cosh(w) + a * (std::sinh(w) / w);
  }
  // Series with scaling so the argument 1-norm is at most 1/2.
  int scale = 0;
  double r = a.norm1();
  while (r > 0.5 && scale < 64) {
    r *= 0.5;
    ++scale;
  }
  const double inv = std::ldexp(1.0, -scale);
  const Multivector x = a * inv;
  Multivector sum = one;
  Multivector term = one;
  bool converged = false;
  double last = 0.0;
  constexpr int kMaxTerms = 128;
  for (int n = 1; n <= kMaxTerms; ++n) {
    term = term * x;
    term *= 1.0 / n;
    sum += term;
    last = term.norm1();
    if (last < tol * 0.25) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("exponential: series did not converge, residual " +
                             std::to_string(last));
  for (int k = 0; k < scale; ++k) sum = sum * sum;
  return sum;
}

/// Reversion-symmetrised bracket {a,b} = (a*rev(b) + b*rev(a))/2.
/// Symmetric by construction; scalar-valued on the theta pairs.
inline Multivector susy_bracket(const Multivector& a, const Multivector& b) {
  return (a * reverse(b) + b * reverse(a)) * 0.5;
}

}  // namespace clq
