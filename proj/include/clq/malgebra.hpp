#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clq/relativistic.hpp"
#include "clq/rep.hpp"
#include "clq/tensor.hpp"

namespace clq {

/// A set of Clifford generators realised inside [Cl(1,3)+]^{(x)k},
/// with the signs their squares are expected to produce.
struct GeneratorFamily {
  std::string name;
  std::vector<TensorElement> elements;
  std::vector<int> expected_signature;  // +1 / -1 per generator
};

namespace detail {

inline Multivector ig20() { return cl13_iota() * gamma_pair(2, 0); }

/// Place a three-factor element into slots 3..5 of a five-factor algebra.
inline TensorElement shift_to_tail(const TensorElement& g,
                                   const std::vector<Signature>& factors5) {
  TensorElement::Terms terms;
  for (const auto& [k, c] : g.terms()) {
    BladeTuple key;
    key.n = 5;
    key.m[2] = k.m[0];
    key.m[3] = k.m[1];
    key.m[4] = k.m[2];
    terms[key] += c;
  }
  return TensorElement(factors5, std::move(terms));
}

}  // namespace detail

/// The seven three-factor Cl(0,7) generators realised over three factors of the even spacetime algebra.
inline GeneratorFamily cl07_generators() {
  using detail::cl13_one;
  using detail::gamma_pair;
  using detail::ig20;
  const Multivector one = cl13_one();
  const Multivector g10 = gamma_pair(1, 0);
  const Multivector g30 = gamma_pair(3, 0);
  GeneratorFamily f;
  f.name = "cl07";
  f.elements = {
      tensor_of({ig20(), g10, one}),
      tensor_of({ig20(), g30, one}),
      tensor_of({one, ig20(), g10}),
      tensor_of({one, ig20(), g30}),
      tensor_of({g10, one, ig20()}),
      tensor_of({g30, one, ig20()}),
      tensor_of({ig20(), ig20(), ig20()}),
  };
  f.expected_signature.assign(7, -1);
  return f;
}

/// The eleven five-factor Cl(10,1) generators. The first nine double the
/// Cl(0,7) family; the tenth is the tau2 element
/// iota gamma2 gamma0 (x) 1^4 (rep [[0,1],[-1,0]] (x) 1) and the eleventh
/// gamma3 gamma0 (x) 1^4. Ten squares are +1, the tenth is -1.
inline GeneratorFamily cl101_generators() {
  using detail::cl13_one;
  using detail::gamma_pair;
  using detail::ig20;
  const Multivector one = cl13_one();
  const Multivector g10 = gamma_pair(1, 0);
  const Multivector g30 = gamma_pair(3, 0);
  GeneratorFamily f;
  f.name = "cl101";
  const TensorElement prefix = tensor_of({g10, ig20(), one, one, one});
  for (const auto& g : cl07_generators().elements) {
    f.elements.push_back(prefix * detail::shift_to_tail(g, prefix.factors()));
    f.expected_signature.push_back(+1);
  }
  f.elements.push_back(tensor_of({g10, g10, one, one, one}));
  f.expected_signature.push_back(+1);
  f.elements.push_back(tensor_of({g10, g30, one, one, one}));
  f.expected_signature.push_back(+1);
  f.elements.push_back(tensor_of({ig20(), one, one, one, one}));
  f.expected_signature.push_back(-1);
  f.elements.push_back(tensor_of({g30, one, one, one, one}));
  f.expected_signature.push_back(+1);
  return f;
}

/// Result of checking the Clifford relations of a family. This is a
/// verification tool: failures are reported, not thrown.
struct FamilyCheck {
  bool relations_hold = true;
  std::vector<int> measured_signature;         // 0 when a square is not +-1
  std::vector<std::pair<int, int>> bad_pairs;  // offending (i,j), 0-based
};

inline FamilyCheck verify_family(const GeneratorFamily& fam) {
  FamilyCheck out;
  const std::size_t n = fam.elements.size();
  const TensorElement one = TensorElement::identity(fam.elements.front().factors());
  out.measured_signature.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorElement sq = fam.elements[i] * fam.elements[i];
    if (sq == one)
      out.measured_signature[i] = +1;
    else if (sq == -one)
      out.measured_signature[i] = -1;
    else
      out.relations_hold = false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const TensorElement anti =
          fam.elements[i] * fam.elements[j] + fam.elements[j] * fam.elements[i];
      if (!anti.is_zero()) {
        out.relations_hold = false;
        out.bad_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  return out;
}

struct AntisymGamma {
  TensorElement value;
  bool repeated_index = false;
};

/// Gamma_[mu1..mul] = (1/l!) sum over permutations of the signed products.
/// For pairwise anticommuting generators this collapses to the ordered
/// product. Repeated indices yield the zero element, flagged.
inline AntisymGamma antisym_gamma(const GeneratorFamily& fam,
                                  std::span<const int> indices) {
  const int l = static_cast<int>(indices.size());
  if (l < 1 || l > 5) throw std::invalid_argument("antisym_gamma: rank must be 1..5");
  for (int i : indices)
    if (i < 0 || i >= static_cast<int>(fam.elements.size()))
      throw std::invalid_argument("antisym_gamma: index out of range");
  AntisymGamma out{TensorElement::zero(fam.elements.front().factors()), false};
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (indices[i] == indices[j]) {
        out.repeated_index = true;
        return out;
      }
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  double fact = 1.0;
  for (int i = 2; i <= l; ++i) fact *= i;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    TensorElement prod = fam.elements[indices[perm[0]]];
    for (int i = 1; i < l; ++i) prod = prod * fam.elements[indices[perm[i]]];
    out.value += (inversions % 2 ? -1.0 : 1.0) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.value *= 1.0 / fact;
  return out;
}

/// The 528 = 11 + 55 + 462 elements C_hat * Gamma_[...] of ranks 1, 2, 5.
/// Central-charge slots are carried as labels only.
struct MAlgebraBasis {
  TensorElement c_hat5;  // built by the antisymmetric-rep recipe
  std::vector<TensorElement> rank1, rank2, rank5;
  std::vector<std::string> labels1, labels2, labels5;

  MAlgebraBasis() : c_hat5(TensorElement::zero({Signature::cl13()})) {}
};

/// C_hat for five factors: the product of all generators whose 32x32
/// representation matrices are antisymmetric.
inline TensorElement build_c_hat5(const GeneratorFamily& fam) {
  TensorElement prod = TensorElement::identity(fam.elements.front().factors());
  bool any = false;
  for (const auto& g : fam.elements) {
    const ComplexMatrix m = rep_tensor(g);
    if (distance(transpose(m), m * Complex(-1.0, 0.0)) < 1e-9) {
      prod = prod * g;
      any = true;
    }
  }
  if (!any) throw std::runtime_error("build_c_hat5: no antisymmetric generator found");
  return prod;
}

inline MAlgebraBasis m_algebra_basis() {
  const GeneratorFamily fam = cl101_generators();
  MAlgebraBasis basis;
  basis.c_hat5 = build_c_hat5(fam);
  const int n = static_cast<int>(fam.elements.size());
  for (int mu = 0; mu < n; ++mu) {
    basis.rank1.push_back(basis.c_hat5 * fam.elements[mu]);
    basis.labels1.push_back("P^" + std::to_string(mu));
  }
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      const int idx[2] = {mu, nu};
      basis.rank2.push_back(basis.c_hat5 * antisym_gamma(fam, idx).value);
      basis.labels2.push_back("Z^{" + std::to_string(mu) + "," + std::to_string(nu) +
                              "}");
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            const int idx[5] = {a, b, c, d, e};
            basis.rank5.push_back(basis.c_hat5 * antisym_gamma(fam, idx).value);
            basis.labels5.push_back("Z^{" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + "," +
                                    std::to_string(d) + "," + std::to_string(e) + "}");
          }
  return basis;
}

/// Everything the M-algebra suite measures. Counts, anticommutation and the
/// tensor-coefficient rank are hard facts; the representation-level
/// symmetry and charge-conjugation relations are basis-dependent and are
/// reported rather than asserted.
struct MAlgebraReport {
  FamilyCheck cl07_check;
  FamilyCheck cl101_check;
  std::size_t count1 = 0, count2 = 0, count5 = 0, total = 0;
  int tensor_rank = 0;
  int symmetric_count = 0;  // of the 528 rep images
  int rep_rank = 0;         // complex rank of the 528 rep images
  std::vector<int> xi;      // per-generator xi in C G C^-1 = xi G^T
  bool xi_uniform = false;
  int xi_value = 0;  // 0 when not uniform
  int alpha = 0;     // C^T = alpha C, 0 when neither sign fits
  bool relations_consistent = false;  // xi = -1, alpha = -1 for (10,1)
};

inline MAlgebraReport verify_m_algebra() {
  MAlgebraReport out;
  out.cl07_check = verify_family(cl07_generators());
  const GeneratorFamily fam = cl101_generators();
  out.cl101_check = verify_family(fam);

  const MAlgebraBasis basis = m_algebra_basis();
  out.count1 = basis.rank1.size();
  out.count2 = basis.rank2.size();
  out.count5 = basis.rank5.size();
  out.total = out.count1 + out.count2 + out.count5;

  std::vector<TensorElement> all;
  all.reserve(out.total);
  for (const auto& e : basis.rank1) all.push_back(e);
  for (const auto& e : basis.rank2) all.push_back(e);
  for (const auto& e : basis.rank5) all.push_back(e);
  out.tensor_rank = rank_of_set(all);

  // Representation-level observations (32x32).
  const ComplexMatrix cm = rep_tensor(basis.c_hat5);
  const ComplexMatrix cm_t = transpose(cm);
  const double cnorm = frobenius_norm(cm);
  if (distance(cm_t, cm) < 1e-9 * cnorm)
    out.alpha = +1;
  else if (distance(cm_t, cm * Complex(-1, 0)) < 1e-9 * cnorm)
    out.alpha = -1;

  // c_hat5 squares to a sign times the identity; invert accordingly.
  const TensorElement csq = basis.c_hat5 * basis.c_hat5;
  if (!csq.is_scalar_multiple_of_identity())
    throw std::runtime_error("verify_m_algebra: c_hat5 square is not scalar");
  const ComplexMatrix cinv = cm * Complex(1.0 / csq.identity_coeff(), 0);
  bool uniform = true;
  int first = 0;
  for (const auto& g : fam.elements) {
    const ComplexMatrix gm = rep_tensor(g);
    const ComplexMatrix lhs = cm * gm * cinv;
    const ComplexMatrix gt = transpose(gm);
    const double nrm = frobenius_norm(gm);
    int xi = 0;
    if (distance(lhs, gt) < 1e-9 * nrm)
      xi = +1;
    else if (distance(lhs, gt * Complex(-1, 0)) < 1e-9 * nrm)
      xi = -1;
    out.xi.push_back(xi);
    if (out.xi.size() == 1) first = xi;
    if (xi == 0 || xi != first) uniform = false;
  }
  out.xi_uniform = uniform;
  out.xi_value = uniform ? first : 0;
  out.relations_consistent = uniform && first == -1 && out.alpha == -1;

  std::vector<ComplexMatrix> images;
  images.reserve(all.size());
  for (const auto& e : all) images.push_back(rep_tensor(e));
  out.symmetric_count = 0;
  for (const auto& m : images)
    if (distance(transpose(m), m) < 1e-9 * std::max(1.0, frobenius_norm(m)))
      ++out.symmetric_count;
  out.rep_rank = rank_c(images);
  return out;
}

}  // namespace clq
