#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clq/matrix.hpp"
#include "clq/spinor.hpp"
#include "clq/tensor.hpp"

namespace clq {

/// Deterministic generator for the seeded property suites. Values are
/// derived from the raw mt19937_64 stream with explicit arithmetic, not
/// std distributions, so a seed reproduces the same bytes everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t bits() { return rng_(); }

  /// Uniform in (0,1].
  double uniform() { return ((rng_() >> 11) + 1) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int range(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  /// Dyadic coefficient in {-2, -1.5, ..., 2} \ {0}: exact in binary
  /// floating point, so algebraic identity checks can demand equality.
  double dyadic() {
    int k = range(8);
    if (k >= 4) ++k;  // skip zero
    return (k - 4) * 0.5;
  }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
  }

  Multivector multivector(const Signature& sig, int terms, bool dyadic_coeffs = true) {
    Multivector m = Multivector::zero(sig);
    for (int t = 0; t < terms; ++t) {
      const BladeMask mask = static_cast<BladeMask>(range(1 << sig.count));
      const double c = dyadic_coeffs ? dyadic() : uniform(-1.0, 1.0);
      m += Multivector::blade(sig, mask, c);
    }
    return m;
  }

  TensorElement tensor(const std::vector<Signature>& factors, int terms,
                       bool dyadic_coeffs = true, bool even_only = false) {
    TensorElement r = TensorElement::zero(factors);
    for (int t = 0; t < terms; ++t) {
      std::vector<BladeMask> blades;
      for (const auto& f : factors) {
        BladeMask mask = static_cast<BladeMask>(range(1 << f.count));
        if (even_only)
          while (std::popcount(static_cast<unsigned>(mask)) & 1)
            mask = static_cast<BladeMask>(range(1 << f.count));
        blades.push_back(mask);
      }
      const double c = dyadic_coeffs ? dyadic() : uniform(-1.0, 1.0);
      r += TensorElement::monomial(factors, blades, c);
    }
    return r;
  }

  QubitState state(int n) {
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto& a : amps) {
      a = Complex(gaussian(), gaussian());
      norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return QubitState(n, std::move(amps));
  }

  /// Haar-ish random unitary: QR of a complex Gaussian matrix by modified
  /// Gram-Schmidt with the R diagonal phase fixed.
  ComplexMatrix unitary(int dim) {
    ComplexMatrix g(dim, dim);
    for (auto& x : g.a) x = Complex(gaussian(), gaussian());
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        Complex proj{};
        for (int i = 0; i < dim; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < dim; ++i) g(i, j) -= proj * g(i, k);
      }
      double nrm = 0.0;
      for (int i = 0; i < dim; ++i) nrm += std::norm(g(i, j));
      nrm = std::sqrt(nrm);
      Complex phase = g(j, j) / std::abs(g(j, j));
      const Complex scale = std::conj(phase) / nrm;
      for (int i = 0; i < dim; ++i) g(i, j) *= scale;
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace clq
