#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qbound/errors.hpp"
#include "qbound/linalg.hpp"

using namespace qbound;

namespace {

ComplexMatrix random_matrix(int rows, int cols, Rng& rng) {
  ComplexMatrix a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a(i, j) = rng.complex_gaussian();
  return a;
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
  ComplexMatrix a = random_matrix(d, d, rng);
  return (a + a.adjoint().eval()) / 2.0;
}

}  // namespace

TEST_CASE("tensor: identity and diagonal cases") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK((tensor(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == 0.0);

  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  a.diagonal() << 1.0, 2.0;
  b.diagonal() << 3.0, 4.0;
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect.diagonal() << 3.0, 4.0, 6.0, 8.0;
  CHECK((tensor(a, b) - expect).norm() == 0.0);
}

TEST_CASE("tensor: trace is multiplicative") {
  Rng rng(11);
  const ComplexMatrix a = random_matrix(2, 2, rng);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  const Complex lhs = tensor(a, b).trace();
  const Complex rhs = a.trace() * b.trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("tensor: dimension cap") {
  const ComplexMatrix big = ComplexMatrix::Identity(80, 80);
  CHECK_THROWS_AS(tensor(big, big), DimensionError);
  CHECK_NOTHROW(tensor(big, big, 6400));
}

TEST_CASE("singular_values: diagonal, zero, and Jacobi oracle") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d.diagonal() << 1.0, -2.0;
  const RealVector sv = singular_values(d);
  CHECK(sv(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sv(1) == doctest::Approx(1.0).epsilon(1e-14));

  const RealVector zeros = singular_values(ComplexMatrix::Zero(3, 5));
  for (int i = 0; i < zeros.size(); ++i) CHECK(zeros(i) == 0.0);

  Rng rng(12);
  const ComplexMatrix a = random_matrix(4, 9, rng);
  const RealVector main = singular_values(a);
  const auto ref = oracle::jacobi_singular_values(a);
  REQUIRE(main.size() == static_cast<long>(ref.size()));
  for (int i = 0; i < main.size(); ++i) {
    CHECK(std::abs(main(i) - ref[i]) < 1e-10);
  }
}

TEST_CASE("svd: full reconstruction") {
  Rng rng(13);
  for (auto [r, c] : {std::pair{3, 3}, {4, 9}, {9, 4}, {1, 7}}) {
    const ComplexMatrix a = random_matrix(r, c, rng);
    const SvdResult s = svd(a);
    ComplexMatrix d = ComplexMatrix::Zero(r, c);
    for (int i = 0; i < s.values.size(); ++i) d(i, i) = s.values(i);
    const ComplexMatrix recon = s.u * d * s.v.adjoint();
    CHECK((a - recon).norm() <= 1e-12 * a.norm());
    CHECK((s.u.adjoint() * s.u - ComplexMatrix::Identity(r, r)).norm() < 1e-12);
    CHECK((s.v.adjoint() * s.v - ComplexMatrix::Identity(c, c)).norm() < 1e-12);
  }
}

TEST_CASE("trace_norm: diagonal, identity, Hermitian eigenvalue route") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d.diagonal() << 1.0, -2.0;
  CHECK(trace_norm(d) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(trace_norm(ComplexMatrix::Identity(5, 5)) ==
        doctest::Approx(5.0).epsilon(1e-14));

  Rng rng(14);
  const ComplexMatrix h = random_hermitian(6, rng);
  const RealVector ev = eigvals_hermitian(h);
  double sum_abs = 0.0;
  for (int i = 0; i < ev.size(); ++i) sum_abs += std::abs(ev(i));
  CHECK(trace_norm(h) == doctest::Approx(sum_abs).epsilon(1e-12));
}

TEST_CASE("trace_norm: dominates Frobenius, equality at rank one") {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(4, 5, rng);
    CHECK(trace_norm(a) >= a.norm() - 1e-12);
  }
  for (int trial = 0; trial < 20; ++trial) {
    ComplexVector u(4), v(5);
    for (int i = 0; i < 4; ++i) u(i) = rng.complex_gaussian();
    for (int i = 0; i < 5; ++i) v(i) = rng.complex_gaussian();
    const ComplexMatrix outer = u * v.adjoint();
    CHECK(trace_norm(outer) ==
          doctest::Approx(outer.norm()).epsilon(1e-10));
  }
}

TEST_CASE("trace_norm: additive over direct sums") {
  Rng rng(16);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const ComplexMatrix b = random_matrix(4, 4, rng);
  ComplexMatrix block = ComplexMatrix::Zero(7, 7);
  block.topLeftCorner(3, 3) = a;
  block.bottomRightCorner(4, 4) = b;
  CHECK(trace_norm(block) ==
        doctest::Approx(trace_norm(a) + trace_norm(b)).epsilon(1e-12));
}

TEST_CASE("trace_norm: unitary invariance") {
  Rng rng(17);
  const ComplexMatrix a = random_matrix(5, 5, rng);
  const ComplexMatrix u = random_unitary(5, rng);
  const ComplexMatrix v = random_unitary(5, rng);
  CHECK(trace_norm(u * a * v) == doctest::Approx(trace_norm(a)).epsilon(1e-10));
}

TEST_CASE("eig_hermitian: basic spectra and identities") {
  const HermitianEig id = eig_hermitian(ComplexMatrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(id.values(i) == doctest::Approx(1.0));

  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3.0, 1.0, 2.0;
  const HermitianEig de = eig_hermitian(d);
  CHECK(de.values(0) == doctest::Approx(1.0));
  CHECK(de.values(1) == doctest::Approx(2.0));
  CHECK(de.values(2) == doctest::Approx(3.0));

  Rng rng(18);
  const ComplexMatrix h = random_hermitian(7, rng);
  const HermitianEig he = eig_hermitian(h);
  CHECK(he.values.sum() == doctest::Approx(h.trace().real()).epsilon(1e-10));
  CHECK((he.vectors.adjoint() * he.vectors - ComplexMatrix::Identity(7, 7))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  for (int i = 0; i < 7; ++i) {
    CHECK((h * he.vectors.col(i) - he.values(i) * he.vectors.col(i))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;  // a(1,0) stays 0
  CHECK_THROWS_AS(eig_hermitian(a), PreconditionError);
  CHECK_THROWS_WITH_AS(eig_hermitian(a),
                       doctest::Contains("deviates from Hermitian"),
                       PreconditionError);
}

TEST_CASE("random_unitary: unitarity and seed determinism") {
  Rng rng(19);
  const ComplexMatrix u = random_unitary(6, rng);
  CHECK((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).norm() < 1e-12);

  Rng r1(77), r2(77);
  const ComplexMatrix u1 = random_unitary(4, r1);
  const ComplexMatrix u2 = random_unitary(4, r2);
  CHECK((u1 - u2).norm() == 0.0);
}

TEST_CASE("check_matrix: rejects non-finite entries") {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  a(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(check_matrix(a), PreconditionError);
  CHECK_THROWS_AS(singular_values(a), PreconditionError);
}
