#include <catch2/catch_amalgamated.hpp>

#include "clq/matrix.hpp"
#include "clq/random.hpp"

using namespace clq;

TEST_CASE("basic matrix algebra", "[matrix]") {
  ComplexMatrix a(2, 2);
  a(0, 0) = Complex(1, 2);
  a(0, 1) = Complex(0, 1);
  a(1, 0) = Complex(3, 0);
  a(1, 1) = Complex(0, -1);
  const ComplexMatrix ad = dagger(a);
  CHECK(ad(0, 0) == Complex(1, -2));
  CHECK(ad(0, 1) == Complex(3, 0));
  CHECK(ad(1, 0) == Complex(0, -1));
  const ComplexMatrix t = transpose(a);
  CHECK(t(0, 1) == Complex(3, 0));
  CHECK(frobenius_norm(ComplexMatrix::identity(4)) == 2.0);
  CHECK_THROWS_AS(a * ComplexMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("kron dimensions and values", "[matrix]") {
  ComplexMatrix z(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  const ComplexMatrix zz = kron(z, z);
  CHECK(zz.rows == 4);
  CHECK(zz(0, 0) == Complex(1, 0));
  CHECK(zz(1, 1) == Complex(-1, 0));
  CHECK(zz(3, 3) == Complex(1, 0));
}

TEST_CASE("expm on known inputs", "[matrix]") {
  CHECK(distance(expm(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) == 0.0);
  // exp(i theta Z) = diag(e^{i theta}, e^{-i theta})
  const double theta = 0.8;
  ComplexMatrix izt(2, 2);
  izt(0, 0) = Complex(0, theta);
  izt(1, 1) = Complex(0, -theta);
  const ComplexMatrix u = expm(izt);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, theta)) < 1e-15);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, -theta)) < 1e-15);
}

TEST_CASE("hermitian eigendecomposition reconstructs", "[matrix]") {
  SeededRng rng(11);
  for (const int n : {2, 4, 8}) {
    ComplexMatrix a(n, n);
    for (auto& x : a.a) x = Complex(rng.gaussian(), rng.gaussian());
    ComplexMatrix h = a + dagger(a);
    const auto eig = detail::hermitian_eig(h);
    CHECK(distance(dagger(eig.vectors) * eig.vectors, ComplexMatrix::identity(n)) <
          1e-12);
    ComplexMatrix recon(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          recon(i, j) += eig.values[k] * eig.vectors(i, k) *
                         std::conj(eig.vectors(j, k));
    CHECK(distance(recon, h) < 1e-11 * (frobenius_norm(h) + 1.0));
    for (int k = 1; k < n; ++k) REQUIRE(eig.values[k - 1] <= eig.values[k]);
  }
}

TEST_CASE("eig_unitary handles degenerate clusters", "[matrix]") {
  // diag(i,-i) has cos(phi) = 0 twice: the second Hermitian observable
  // must split the cluster.
  ComplexMatrix u(2, 2);
  u(0, 0) = Complex(0, 1);
  u(1, 1) = Complex(0, -1);
  const auto eig = eig_unitary(u);
  const double p0 = std::arg(eig.eigenvalues[0]);
  const double p1 = std::arg(eig.eigenvalues[1]);
  CHECK(std::abs(std::abs(p0) - std::acos(-1.0) / 2) < 1e-12);
  CHECK(std::abs(std::abs(p1) - std::acos(-1.0) / 2) < 1e-12);
  CHECK(p0 * p1 < 0.0);
}

TEST_CASE("logm_unitary round trips and stays anti-Hermitian", "[matrix]") {
  SeededRng rng(12);
  for (int t = 0; t < 40; ++t) {
    const int n = t % 3 == 2 ? 8 : (t % 3 ? 4 : 2);
    const ComplexMatrix u = rng.unitary(n);
    const ComplexMatrix a = logm_unitary(u);
    REQUIRE(distance(dagger(a), a * Complex(-1, 0)) < 1e-12);
    REQUIRE(distance(expm(a), u) < 1e-9);
    // eigenphases stay in the principal branch
    const auto eig = detail::hermitian_eig(a * Complex(0, -1));
    for (const double phi : eig.values) {
      REQUIRE(phi <= std::acos(-1.0) + 1e-9);
      REQUIRE(phi > -std::acos(-1.0) - 1e-9);
    }
  }
}

TEST_CASE("logm_unitary flags the branch cut and rejects non-unitaries", "[matrix]") {
  ComplexMatrix u = ComplexMatrix::identity(2);
  u(1, 1) = -1.0;  // eigenvalue on the cut
  bool warn = false;
  const ComplexMatrix a = logm_unitary(u, &warn);
  CHECK(warn);
  CHECK(distance(expm(a), u) < 1e-10);
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(logm_unitary(bad), std::invalid_argument);
  CHECK_THROWS_AS(eig_unitary(bad), std::invalid_argument);
}

TEST_CASE("complex rank", "[matrix]") {
  ComplexMatrix a = ComplexMatrix::identity(2);
  ComplexMatrix b = a * Complex(0, 2);  // dependent over C
  ComplexMatrix c(2, 2);
  c(0, 1) = 1;
  const std::vector<ComplexMatrix> dependent{a, b};
  CHECK(rank_c(dependent) == 1);
  const std::vector<ComplexMatrix> independent{a, c};
  CHECK(rank_c(independent) == 2);
  CHECK(rank_c(std::vector<ComplexMatrix>{}) == 0);
}
