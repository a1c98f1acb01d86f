#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "clq/multivector.hpp"

namespace clq {

inline constexpr int kMaxFactors = 8;

/// One basis blade per tensor factor, packed as an array of masks.
struct BladeTuple {
  std::uint8_t n = 0;
  std::array<BladeMask, kMaxFactors> m{};

  friend auto operator<=>(const BladeTuple&, const BladeTuple&) = default;
};

/// Sparse real element of an n-fold tensor product of Clifford algebras.
/// The product rule is plain (ungraded): (x (x) y)(u (x) v) = xu (x) yv,
/// with no sign between factors.
class TensorElement {
 public:
  using Terms = std::map<BladeTuple, double>;

  explicit TensorElement(std::vector<Signature> factors) : factors_(std::move(factors)) {
    if (factors_.empty() || factors_.size() > kMaxFactors)
      throw std::invalid_argument("TensorElement: need 1..8 factors");
  }
  TensorElement(std::vector<Signature> factors, Terms terms)
      : TensorElement(std::move(factors)) {
    terms_ = std::move(terms);
    prune();
  }

  static TensorElement zero(std::vector<Signature> factors) {
    return TensorElement(std::move(factors));
  }
  static TensorElement identity(std::vector<Signature> factors) {
    TensorElement t(std::move(factors));
    BladeTuple k;
    k.n = static_cast<std::uint8_t>(t.factors_.size());
    t.terms_[k] = 1.0;
    return t;
  }
  static TensorElement monomial(std::vector<Signature> factors,
                                std::span<const BladeMask> blades, double coeff = 1.0) {
    TensorElement t(std::move(factors));
    if (blades.size() != t.factors_.size())
      throw std::invalid_argument("TensorElement: one blade per factor required");
    BladeTuple k;
    k.n = static_cast<std::uint8_t>(blades.size());
    for (std::size_t i = 0; i < blades.size(); ++i) k.m[i] = blades[i];
    t.terms_[k] = coeff;
    t.prune();
    return t;
  }

  const std::vector<Signature>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double coeff(const BladeTuple& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0.0 : it->second;
  }

  bool is_scalar_multiple_of_identity() const {
    if (terms_.empty()) return true;
    BladeTuple id;
    id.n = static_cast<std::uint8_t>(factors_.size());
    return terms_.size() == 1 && terms_.begin()->first == id;
  }
  double identity_coeff() const {
    BladeTuple id;
    id.n = static_cast<std::uint8_t>(factors_.size());
    return coeff(id);
  }

  TensorElement operator-() const {
    TensorElement r(factors_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  TensorElement& operator+=(const TensorElement& o) {
    require_same_factors(o);
    for (const auto& [k, c] : o.terms_) terms_[k] += c;
    prune();
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    require_same_factors(o);
    for (const auto& [k, c] : o.terms_) terms_[k] -= c;
    prune();
    return *this;
  }
  TensorElement& operator*=(double s) {
    for (auto& [k, c] : terms_) c *= s;
    prune();
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, double s) { return a *= s; }
  friend TensorElement operator*(double s, TensorElement a) { return a *= s; }

  friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.require_same_factors(b);
    TensorElement r(a.factors_);
    const int n = a.factor_count();
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        int sign = 1;
        BladeTuple k;
        k.n = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) {
          sign *= detail::blade_product_sign(ka.m[i], kb.m[i], a.factors_[i].neg_mask);
          k.m[i] = ka.m[i] ^ kb.m[i];
        }
        r.terms_[k] += sign * ca * cb;
      }
    r.prune();
    return r;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.factors_ == b.factors_ && a.terms_ == b.terms_;
  }

  friend double max_coeff_distance(const TensorElement& a, const TensorElement& b) {
    if (a.factors_ != b.factors_) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (const auto& [k, c] : a.terms_) d = std::max(d, std::abs(c - b.coeff(k)));
    for (const auto& [k, c] : b.terms_) d = std::max(d, std::abs(c - a.coeff(k)));
    return d;
  }

  double norm1() const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) s += std::abs(c);
    return s;
  }

 private:
  void require_same_factors(const TensorElement& o) const {
    if (factors_ != o.factors_)
      throw std::invalid_argument("TensorElement: factor lists differ");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= kCoeffPrune)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  std::vector<Signature> factors_;
  Terms terms_;
};

/// Pure tensor of the given factors, expanded multilinearly.
inline TensorElement tensor_of(std::span<const Multivector> parts) {
  if (parts.empty()) throw std::invalid_argument("tensor_of: empty factor list");
  std::vector<Signature> sigs;
  sigs.reserve(parts.size());
  for (const auto& p : parts) sigs.push_back(p.signature());
  TensorElement::Terms terms;
  BladeTuple k;
  k.n = static_cast<std::uint8_t>(parts.size());
  // Recursive expansion over the sparse factor terms.
  auto expand = [&](auto&& self, std::size_t i, double c) -> void {
    if (i == parts.size()) {
      terms[k] += c;
      return;
    }
    for (const auto& [m, cf] : parts[i].terms()) {
      k.m[i] = m;
      self(self, i + 1, c * cf);
    }
  };
  expand(expand, 0, 1.0);
  return TensorElement(std::move(sigs), std::move(terms));
}

inline TensorElement tensor_of(std::initializer_list<Multivector> parts) {
  return tensor_of(std::span<const Multivector>(parts.begin(), parts.size()));
}

/// Reversion applied independently in each factor.
inline TensorElement reverse_all(const TensorElement& a) {
  TensorElement::Terms t;
  for (const auto& [k, c] : a.terms()) {
    int sign = 1;
    for (int i = 0; i < k.n; ++i)
      sign *= detail::reversion_sign(std::popcount(static_cast<unsigned>(k.m[i])));
    t[k] = sign * c;
  }
  return TensorElement(a.factors(), std::move(t));
}

/// Symmetrised bracket on the tensor algebra, as for multivectors.
inline TensorElement susy_bracket(const TensorElement& a, const TensorElement& b) {
  return (a * reverse_all(b) + b * reverse_all(a)) * 0.5;
}

/// exp of a tensor element; closed form when a*a is a multiple of the
/// identity tensor, scaled-and-squared series otherwise.
inline TensorElement exponential_tensor(const TensorElement& a, double tol = 1e-12) {
  const TensorElement one = TensorElement::identity(a.factors());
  const TensorElement sq = a * a;
  if (sq.is_scalar_multiple_of_identity()) {
    const double lam = sq.identity_coeff();
    if (lam == 0.0) return one + a;
    const double w = std::sqrt(std::abs(lam));
    if (lam < 0.0) return one * std::cos(w) + a * (std::sin(w) / w);
    return one * std::cosh(w) + a * (std::sinh(w) / w);
  }
  int scale = 0;
  double r = a.norm1();
  while (r > 0.5 && scale < 64) {
    r *= 0.5;
    ++scale;
  }
  const TensorElement x = a * std::ldexp(1.0, -scale);
  TensorElement sum = one;
  TensorElement term = one;
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
    throw std::runtime_error("exponential_tensor: series did not converge, residual " +
                             std::to_string(last));
  for (int k = 0; k < scale; ++k) sum = sum * sum;
  return sum;
}

namespace detail {

/// Rank of the real span of sparse coefficient vectors, by Gaussian
/// elimination with max-magnitude pivots.
template <typename Key>
int sparse_rank(std::vector<std::map<Key, double>> rows, double pivot_tol) {
  struct PivotRow {
    Key pivot;
    std::map<Key, double> row;  // normalised so row[pivot] == 1
  };
  std::vector<PivotRow> basis;
  int rank = 0;
  for (auto& row : rows) {
    for (const auto& pr : basis) {
      auto it = row.find(pr.pivot);
      if (it == row.end()) continue;
      const double f = it->second;
      for (const auto& [k, v] : pr.row) row[k] -= f * v;
    }
    Key best{};
    double best_abs = 0.0;
    for (const auto& [k, v] : row)
      if (std::abs(v) > best_abs) {
        best_abs = std::abs(v);
        best = k;
      }
    if (best_abs <= pivot_tol) continue;
    const double inv = 1.0 / row.at(best);
    std::map<Key, double> norm;
    for (const auto& [k, v] : row)
      if (std::abs(v * inv) > 1e-300) norm[k] = v * inv;
    basis.push_back(PivotRow{best, std::move(norm)});
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Dimension of the real linear span, over the tensor-coefficient vectors.
inline int rank_of_set(std::span<const TensorElement> elems, double pivot_tol = 1e-10) {
  if (elems.empty()) return 0;
  for (const auto& e : elems)
    if (e.factors() != elems.front().factors())
      throw std::invalid_argument("rank_of_set: factor lists differ");
  std::vector<std::map<BladeTuple, double>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(e.terms());
  return detail::sparse_rank(std::move(rows), pivot_tol);
}

inline int rank_of_set(std::span<const Multivector> elems, double pivot_tol = 1e-10) {
  std::vector<std::map<BladeMask, double>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(e.terms());
  return detail::sparse_rank(std::move(rows), pivot_tol);
}

}  // namespace clq
