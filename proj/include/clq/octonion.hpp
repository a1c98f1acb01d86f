#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace clq {

/// Octonion over the basis o0 (unit), o1..o7, with the Fano-plane
/// multiplication fixed by the oriented triples
///   (1,2,3) (1,4,5) (2,4,6) (3,4,7) (2,5,7) (3,6,5) (1,7,6),
/// each cyclic: o_i o_j = o_k. One Fano orientation must be fixed; the structure
/// constants below follow one standard convention (all choices are isomorphic).
struct Octonion {
  std::array<double, 8> c{};

  Octonion() = default;
  explicit Octonion(std::array<double, 8> comps) : c(comps) {}

  static Octonion zero() { return Octonion{}; }
  static Octonion real(double v) {
    Octonion o;
    o.c[0] = v;
    return o;
  }
  static Octonion unit(int k) {
    if (k < 0 || k > 7) throw std::invalid_argument("Octonion::unit: index 0..7");
    Octonion o;
    o.c[k] = 1.0;
    return o;
  }

  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  Octonion& operator*=(double s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }

  friend bool operator==(const Octonion&, const Octonion&) = default;
};

namespace detail {

/// table[i][j] = (k, sign) with o_i o_j = sign * o_k for i,j in 1..7;
/// k = 0, sign = -1 encodes o_i o_i = -1.
struct OctTable {
  int unit[8][8]{};
  int sign[8][8]{};
};

inline const OctTable& oct_table() {
  static const OctTable table = [] {
    OctTable t;
    constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                   {2, 5, 7}, {3, 6, 5}, {1, 7, 6}};
    for (int i = 1; i <= 7; ++i) {
      t.unit[i][i] = 0;
      t.sign[i][i] = -1;
    }
    for (const auto& tr : triples) {
      const int a = tr[0], b = tr[1], c = tr[2];
      // cyclic: ab=c, bc=a, ca=b; anticyclic negative
      const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
      for (const auto& [x, y, z] : cyc) {
        t.unit[x][y] = z;
        t.sign[x][y] = +1;
        t.unit[y][x] = z;
        t.sign[y][x] = -1;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Nonassociative bilinear product from the Fano table.
inline Octonion oct_multiply(const Octonion& a, const Octonion& b) {
  const auto& t = detail::oct_table();
  Octonion r;
  r.c[0] = a.c[0] * b.c[0];
  for (int i = 1; i <= 7; ++i) {
    r.c[i] += a.c[0] * b.c[i];
    r.c[i] += a.c[i] * b.c[0];
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const double v = a.c[i] * b.c[j];
      if (v == 0.0) continue;
      if (i == j)
        r.c[0] -= v;
      else
        r.c[t.unit[i][j]] += t.sign[i][j] * v;
    }
  return r;
}

inline Octonion oct_conj(const Octonion& a) {
  Octonion r = -a;
  r.c[0] = a.c[0];
  return r;
}

inline double oct_norm(const Octonion& a) {
  double s = 0.0;
  for (double x : a.c) s += x * x;
  return std::sqrt(s);
}

/// Structure constant C_ijk: the o_k component of o_i o_j (i != j).
inline double oct_structure_constant(int i, int j, int k) {
  const auto& t = detail::oct_table();
  if (i == j) return 0.0;
  return t.unit[i][j] == k ? static_cast<double>(t.sign[i][j]) : 0.0;
}

/// Square grid of octonion entries (sizes 2 or 4 in all supported uses).
struct OctonionMatrix {
  int n = 0;
  std::vector<Octonion> e;

  explicit OctonionMatrix(int size) : n(size), e(static_cast<std::size_t>(size) * size) {}

  Octonion& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  const Octonion& operator()(int i, int j) const {
    return e[static_cast<std::size_t>(i) * n + j];
  }

  static OctonionMatrix identity(int size) {
    OctonionMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = Octonion::real(1.0);
    return m;
  }

  friend bool operator==(const OctonionMatrix&, const OctonionMatrix&) = default;
};

/// Entrywise sums of octonion products, fixed left-to-right evaluation
/// (matrix entry times operand entry). Nonassociativity is measured by the
/// callers, never assumed away.
inline OctonionMatrix oct_matrix_product(const OctonionMatrix& m, const OctonionMatrix& n) {
  if (m.n != n.n) throw std::invalid_argument("oct_matrix_product: size mismatch");
  OctonionMatrix r(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      for (int k = 0; k < m.n; ++k) r(i, j) += oct_multiply(m(i, k), n(k, j));
  return r;
}

inline std::vector<Octonion> oct_matrix_apply(const OctonionMatrix& m,
                                              const std::vector<Octonion>& v) {
  if (static_cast<int>(v.size()) != m.n)
    throw std::invalid_argument("oct_matrix_apply: size mismatch");
  std::vector<Octonion> r(v.size());
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < m.n; ++k) r[i] += oct_multiply(m(i, k), v[k]);
  return r;
}

inline double oct_matrix_distance(const OctonionMatrix& a, const OctonionMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    const Octonion diff = a.e[i] - b.e[i];
    d = std::max(d, oct_norm(diff));
  }
  return d;
}

/// The octonionic Cl(10,1) matrices: mu = 1..7 carry o_mu in the
/// antidiagonal block pattern, mu = 8, 9, 10 and 0 are real-entried.
inline OctonionMatrix octonion_gamma(int mu) {
  OctonionMatrix m(4);
  const Octonion one = Octonion::real(1.0);
  if (mu >= 1 && mu <= 7) {
    const Octonion o = Octonion::unit(mu);
    m(0, 3) = o;
    m(1, 2) = -o;
    m(2, 1) = o;
    m(3, 0) = -o;
    return m;
  }
  switch (mu) {
    case 8:
      m(0, 3) = one; m(1, 2) = one; m(2, 1) = one; m(3, 0) = one;
      return m;
    case 9:
      m(0, 2) = one; m(1, 3) = -one; m(2, 0) = one; m(3, 1) = -one;
      return m;
    case 10:
      m(0, 0) = one; m(1, 1) = one; m(2, 2) = -one; m(3, 3) = -one;
      return m;
    case 0:
      m(0, 2) = one; m(1, 3) = one; m(2, 0) = -one; m(3, 1) = -one;
      return m;
    default:
      throw std::invalid_argument("octonion_gamma: index must be 0..10");
  }
}

enum class PatternVerdict { Entangled, PossiblySeparable };

/// Two-octonionic-qubit column (zeta1..zeta4).
struct OctonionQubitPair {
  std::array<Octonion, 4> zeta;

  bool is_normalized(double tol = 1e-12) const {
    double s = 0.0;
    for (const auto& z : zeta) s += oct_norm(z) * oct_norm(z);
    return std::abs(s - 1.0) <= tol;
  }
};

/// Zero-divisor pattern test. In a division algebra a product vanishes only
/// when a factor does, so a separable (theta (x) phi) column cannot have the
/// diagonal (z1,0,0,z4) or anti-diagonal (0,z2,z3,0) two-nonzero patterns.
/// Those return Entangled; every other pattern returns PossiblySeparable
/// (the pattern logic is necessary, not sufficient). All-zero is rejected.
inline PatternVerdict oqubit_pattern_check(const OctonionQubitPair& state,
                                           double tol = 1e-12) {
  bool nz[4];
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    nz[i] = oct_norm(state.zeta[i]) > tol;
    any = any || nz[i];
  }
  if (!any) throw std::invalid_argument("oqubit_pattern_check: all components zero");
  const bool diagonal = nz[0] && nz[3] && !nz[1] && !nz[2];
  const bool antidiagonal = nz[1] && nz[2] && !nz[0] && !nz[3];
  return (diagonal || antidiagonal) ? PatternVerdict::Entangled
                                    : PatternVerdict::PossiblySeparable;
}

}  // namespace clq
