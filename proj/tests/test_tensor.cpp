#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unruhlab/tensor.hpp"

using namespace unruhlab;

TEST_CASE("kron matches index-loop product and is associative") {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = oracle::random_hermitian(2, rng);
  const ComplexMatrix b = oracle::random_hermitian(3, rng);
  const ComplexMatrix c = oracle::random_hermitian(2, rng);
  CHECK(oracle::max_abs(kron(a, b) - oracle::kron(a, b)) < 1e-15);
  CHECK(oracle::max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-13);
}

TEST_CASE("partial trace agrees with basis loops") {
  std::mt19937_64 rng(2);
  for (auto [da, db] : {std::pair{2, 2}, {3, 3}, {4, 3}, {2, 4}}) {
    const ComplexMatrix m = oracle::random_density(da * db, rng);
    const DensityMatrix rho({da, db}, m);
    CHECK(oracle::max_abs(partial_trace(rho, 0).matrix() - oracle::trace_out_b(m, da, db)) < 1e-14);
    CHECK(oracle::max_abs(partial_trace(rho, 1).matrix() - oracle::trace_out_a(m, da, db)) < 1e-14);
  }
}

TEST_CASE("partial trace of a product state recovers the factors") {
  std::mt19937_64 rng(3);
  const DensityMatrix a({2}, oracle::random_density(2, rng));
  const DensityMatrix b({3}, oracle::random_density(3, rng));
  const auto ab = tensor_product(a, b);
  CHECK(ab.dims() == Dims{2, 3});
  CHECK(oracle::max_abs(partial_trace(ab, 0).matrix() - a.matrix()) < 1e-14);
  CHECK(oracle::max_abs(partial_trace(ab, 1).matrix() - b.matrix()) < 1e-14);
}

TEST_CASE("tripartite partial trace keeps ordered subsystems") {
  std::mt19937_64 rng(4);
  const ComplexMatrix m = oracle::random_density(12, rng);
  const DensityMatrix rho({2, 3, 2}, m);
  const std::vector<int> keep{0, 1};
  const auto ab = partial_trace(rho, keep);
  CHECK(ab.dims() == Dims{2, 3});
  CHECK(oracle::max_abs(ab.matrix() - oracle::trace_out_b(m, 6, 2)) < 1e-14);
  const std::vector<int> both{0, 2};
  CHECK(partial_trace(rho, both).dims() == Dims{2, 2});
}

TEST_CASE("partial transpose is an involution and matches the oracle") {
  std::mt19937_64 rng(5);
  for (auto [da, db] : {std::pair{2, 2}, {4, 3}}) {
    const ComplexMatrix m = oracle::random_density(da * db, rng);
    const DensityMatrix rho({da, db}, m);
    const ComplexMatrix ta = partial_transpose(rho, 0);
    CHECK(oracle::max_abs(ta - oracle::transpose_a(m, da, db)) < 1e-15);
    const DensityMatrix back = DensityMatrix::unchecked({da, db}, ta);
    CHECK(oracle::max_abs(partial_transpose(back, 0) - m) < 1e-15);
    const ComplexMatrix full = partial_transpose(DensityMatrix::unchecked({da, db}, partial_transpose(rho, 1)), 0);
    CHECK(oracle::max_abs(full - m.transpose()) < 1e-15);
  }
}

TEST_CASE("Jacobi eigenvalues: trace, Frobenius norm and Eigen reference") {
  std::mt19937_64 rng(6);
  for (int n : {1, 2, 3, 4, 9, 12}) {
    const ComplexMatrix h = oracle::random_hermitian(n, rng);
    const RealVector ev = hermitian_eigenvalues(h);
    CHECK(ev.size() == n);
    CHECK(std::abs(ev.sum() - h.trace().real()) < 1e-12);
    CHECK(std::abs(ev.squaredNorm() - h.squaredNorm()) < 1e-11);
    CHECK((ev - oracle::eigenvalues(h)).cwiseAbs().maxCoeff() < 1e-12);
    for (Eigen::Index i = 1; i < ev.size(); ++i) CHECK(ev(i - 1) <= ev(i));
  }
}

TEST_CASE("characteristic polynomial vanishes at the computed eigenvalues") {
  std::mt19937_64 rng(7);
  const ComplexMatrix h = oracle::random_hermitian(4, rng);
  for (double lambda : hermitian_eigenvalues(h)) {
    const ComplexMatrix shifted = h - lambda * ComplexMatrix::Identity(4, 4);
    CHECK(std::abs(shifted.determinant()) < 1e-10 * std::pow(h.norm(), 3));
  }
}

TEST_CASE("degenerate and diagonal spectra") {
  const RealVector ev = hermitian_eigenvalues(ComplexMatrix::Identity(5, 5) * 0.2);
  CHECK((ev.array() - 0.2).abs().maxCoeff() < 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3.0, -1.0, 2.0;
  const RealVector sorted = hermitian_eigenvalues(d);
  CHECK(sorted(0) == doctest::Approx(-1.0));
  CHECK(sorted(2) == doctest::Approx(3.0));
}

TEST_CASE("eigensolver input errors") {
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), NotSquare);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), NonHermitian);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hermitian_eigenvalues(m), InvalidState);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix({2, 2}, ComplexMatrix::Identity(3, 3) / 3.0), DimMismatch);
  CHECK_THROWS_AS(DensityMatrix({2}, ComplexMatrix::Identity(2, 2)), InvalidState);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix({2}, neg), NotPositive);
  ComplexMatrix asym = ComplexMatrix::Identity(2, 2) / 2.0;
  asym(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix({2}, asym), NonHermitian);
  CHECK_NOTHROW(DensityMatrix::unchecked({2}, neg));
  CHECK_THROWS_AS(partial_trace(DensityMatrix({2, 2}, ComplexMatrix::Identity(4, 4) / 4.0), 2),
                  InvalidSubsystem);
  CHECK_THROWS_AS(partial_transpose(DensityMatrix({2, 2}, ComplexMatrix::Identity(4, 4) / 4.0), -1),
                  InvalidSubsystem);
}

TEST_CASE("entropies") {
  CHECK(von_neumann_entropy(DensityMatrix({2, 2}, ComplexMatrix::Identity(4, 4) / 4.0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1 / std::sqrt(2.0);
  psi(2) = -1 / std::sqrt(2.0);
  const auto bell = pure_state({2, 2}, psi);
  CHECK(std::abs(von_neumann_entropy(bell)) < 1e-12);
  CHECK(von_neumann_entropy(partial_trace(bell, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(shannon_entropy_bits(RealVector::Constant(3, 1.0 / 3)) == doctest::Approx(std::log2(3.0)));
  RealVector p(3);
  p << 1.0, 0.0, 0.0;
  CHECK(shannon_entropy_bits(p) == 0.0);

  std::mt19937_64 rng(8);
  for (int n : {2, 3, 4, 12}) {
    const double s = von_neumann_entropy(DensityMatrix({n}, oracle::random_density(n, rng)));
    CHECK(s >= 0.0);
    CHECK(s <= std::log2(n) + 1e-12);
  }
}
