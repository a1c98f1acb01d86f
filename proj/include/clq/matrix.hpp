#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clq {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. All supported uses stay at or below
/// 64x64, so plain O(n^3) algorithms are used throughout.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& x : a) x *= s;
    return *this;
  }
  friend ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y) { return x += y; }
  friend ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y) { return x -= y; }
  friend ComplexMatrix operator*(ComplexMatrix x, Complex s) { return x *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix x) { return x *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    ComplexMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Complex v = x(i, k);
        if (v == Complex{}) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  void check_same_shape(const ComplexMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
      throw std::invalid_argument("matrix: shape mismatch");
  }
};

inline ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

inline ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Complex v = x(i, j);
      if (v == Complex{}) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r(i * y.rows + k, j * y.cols + l) = v * y(k, l);
    }
  return r;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.a) s += std::norm(x);
  return std::sqrt(s);
}

inline double distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  x.check_same_shape(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) s += std::norm(x.a[i] - y.a[i]);
  return std::sqrt(s);
}

inline bool approx_equal(const ComplexMatrix& x, const ComplexMatrix& y, double tol) {
  return x.rows == y.rows && x.cols == y.cols && distance(x, y) <= tol;
}

/// Row-major debug text.
inline std::string to_debug_string(const ComplexMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      const Complex v = m(i, j);
      s += "(" + std::to_string(v.real()) + "," + std::to_string(v.imag()) + ") ";
    }
    s += "\n";
  }
  return s;
}

/// Matrix exponential via scaling-and-squaring with a Taylor series.
inline ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("expm: square matrix required");
  const int n = m.rows;
  int scale = 0;
  double nrm = frobenius_norm(m);
  while (nrm > 0.5 && scale < 64) {
    nrm *= 0.5;
    ++scale;
  }
  ComplexMatrix x = m;
  x *= Complex(std::ldexp(1.0, -scale), 0.0);
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = term * x;
    term *= Complex(1.0 / k, 0.0);
    sum += term;
    if (frobenius_norm(term) < 1e-18) break;
  }
  for (int k = 0; k < scale; ++k) sum = sum * sum;
  return sum;
}

namespace detail {

/// Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
/// Returns eigenvalues (ascending) and the unitary of column eigenvectors.
struct HermitianEig {
  std::vector<double> values;
  ComplexMatrix vectors;
};

inline HermitianEig hermitian_eig(ComplexMatrix h) {
  if (h.rows != h.cols) throw std::invalid_argument("hermitian_eig: square required");
  const int n = h.rows;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double base = frobenius_norm(h) + 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(h(p, q));
    if (std::sqrt(off) < 1e-14 * base) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        if (std::abs(hpq) < 1e-300) continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const Complex phase = hpq / std::abs(hpq);
        // Rotation diagonalising [[app, |hpq|], [|hpq|, aqq]].
        const double theta = 0.5 * std::atan2(2.0 * std::abs(hpq), app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Columns p,q of the similarity transform: U = [[c, -s*phase],
        // [s*conj(phase), c]] acting on the (p,q) plane.
        for (int i = 0; i < n; ++i) {
          const Complex hip = h(i, p);
          const Complex hiq = h(i, q);
          h(i, p) = c * hip + s * std::conj(phase) * hiq;
          h(i, q) = -s * phase * hip + c * hiq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex hpj = h(p, j);
          const Complex hqj = h(q, j);
          h(p, j) = c * hpj + s * phase * hqj;
          h(q, j) = -s * std::conj(phase) * hpj + c * hqj;
        }
        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(phase) * viq;
          v(i, q) = -s * phase * vip + c * viq;
        }
      }
  }
  HermitianEig out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = h(i, i).real();
  // Sort ascending, permuting eigenvector columns alongside.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return out.values[x] < out.values[y]; });
  HermitianEig sorted;
  sorted.values.resize(n);
  sorted.vectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    sorted.values[j] = out.values[perm[j]];
    for (int i = 0; i < n; ++i) sorted.vectors(i, j) = v(i, perm[j]);
  }
  return sorted;
}

}  // namespace detail

inline double unitarity_defect(const ComplexMatrix& u) {
  return distance(dagger(u) * u, ComplexMatrix::identity(u.rows));
}

struct UnitaryEig {
  std::vector<Complex> eigenvalues;
  ComplexMatrix eigenvectors;   // columns
  bool branch_warning = false;  // an eigenphase sits at the +-pi branch cut
};

/// Eigendecomposition of a unitary via Hermitian reduction: diagonalise
/// (u+u†)/2, then split degenerate clusters with (u-u†)/(2i).
inline UnitaryEig eig_unitary(const ComplexMatrix& u) {
  if (u.rows != u.cols) throw std::invalid_argument("eig_unitary: square required");
  if (unitarity_defect(u) > 1e-10)
    throw std::invalid_argument("eig_unitary: input is not unitary");
  const int n = u.rows;
  ComplexMatrix h1(n, n), h2(n, n);
  const ComplexMatrix ud = dagger(u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h1(i, j) = 0.5 * (u(i, j) + ud(i, j));
      h2(i, j) = Complex(0, -0.5) * (u(i, j) - ud(i, j));
    }
  auto e1 = detail::hermitian_eig(h1);
  ComplexMatrix v = e1.vectors;
  // Refine clusters of equal cos(phi) with the sin(phi) observable.
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(e1.values[end] - e1.values[start]) < 1e-8) ++end;
    if (end - start > 1) {
      const int m = end - start;
      ComplexMatrix block(m, m);
      // block = P† h2 P restricted to the cluster columns.
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Complex s{};
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
              s += std::conj(v(r, start + i)) * h2(r, c) * v(c, start + j);
          block(i, j) = s;
        }
      auto e2 = detail::hermitian_eig(block);
      ComplexMatrix nv(n, m);
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < m; ++j) {
          Complex s{};
          for (int i = 0; i < m; ++i) s += v(r, start + i) * e2.vectors(i, j);
          nv(r, j) = s;
        }
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < m; ++j) v(r, start + j) = nv(r, j);
    }
    start = end;
  }
  UnitaryEig out;
  out.eigenvectors = v;
  out.eigenvalues.resize(n);
  const ComplexMatrix d = dagger(v) * u * v;
  double offdiag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag += std::norm(d(i, j));
  if (std::sqrt(offdiag) > 1e-8)
    throw std::runtime_error("eig_unitary: diagonalisation failed, off-diagonal " +
                             std::to_string(std::sqrt(offdiag)));
  for (int i = 0; i < n; ++i) {
    Complex lam = d(i, i);
    lam /= std::abs(lam);  // unit modulus
    out.eigenvalues[i] = lam;
    const double phi = std::atan2(lam.imag(), lam.real());
    if (std::abs(phi) > std::acos(-1.0) - 1e-9) out.branch_warning = true;
  }
  return out;
}

/// Principal-branch logarithm of a unitary: anti-Hermitian A with
/// expm(A) = u and eigenphases in (-pi, pi].
inline ComplexMatrix logm_unitary(const ComplexMatrix& u, bool* branch_warning = nullptr) {
  auto eig = eig_unitary(u);
  if (branch_warning) *branch_warning = eig.branch_warning;
  const int n = u.rows;
  ComplexMatrix a(n, n);
  const double pi = std::acos(-1.0);
  for (int k = 0; k < n; ++k) {
    double phi = std::atan2(eig.eigenvalues[k].imag(), eig.eigenvalues[k].real());
    if (phi <= -pi) phi = pi;  // principal branch closes at +pi
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) += Complex(0, phi) * eig.eigenvectors(i, k) *
                   std::conj(eig.eigenvectors(j, k));
  }
  // Clean to exactly anti-Hermitian.
  const ComplexMatrix ad = dagger(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (a(i, j) - ad(i, j));
  return a;
}

/// Complex-linear rank of a list of equally-shaped matrices, by Gaussian
/// elimination over their flattened entries.
inline int rank_c(std::span<const ComplexMatrix> mats, double pivot_tol = 1e-9) {
  if (mats.empty()) return 0;
  const std::size_t dim = mats.front().a.size();
  std::vector<std::vector<Complex>> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.a.size() != dim || m.rows != mats.front().rows)
      throw std::invalid_argument("rank_c: shape mismatch");
    rows.push_back(m.a);
  }
  std::vector<std::pair<std::size_t, std::vector<Complex>>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    for (const auto& [pc, prow] : pivots) {
      const Complex f = row[pc];
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * prow[j];
    }
    std::size_t best = 0;
    double best_abs = 0.0;
    for (std::size_t j = 0; j < dim; ++j)
      if (std::abs(row[j]) > best_abs) {
        best_abs = std::abs(row[j]);
        best = j;
      }
    if (best_abs <= pivot_tol) continue;
    const Complex inv = 1.0 / row[best];
    for (std::size_t j = 0; j < dim; ++j) row[j] *= inv;
    pivots.emplace_back(best, row);
    ++rank;
  }
  return rank;
}

}  // namespace clq
