#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "unruhlab/local_ops.hpp"
#include "unruhlab/unruh_channel.hpp"

using namespace unruhlab;

TEST_CASE("measurement operators") {
  const ComplexMatrix w = build_operator(MeasurementKind::weak, 2, {0.36});
  CHECK(w(0, 0).real() == 1.0);
  CHECK(w(1, 1).real() == doctest::Approx(0.8));
  const ComplexMatrix r = build_operator(MeasurementKind::reverse, 3, {0.36, 0.19});
  CHECK(r(0, 0).real() == doctest::Approx(0.8 * 0.9));
  CHECK(r(1, 1).real() == doctest::Approx(0.8));
  CHECK(r(2, 2).real() == doctest::Approx(0.9));
  CHECK_THROWS_AS(build_operator(MeasurementKind::weak, 2, {1.2}), BadStrength);
  CHECK_THROWS_AS(build_operator(MeasurementKind::weak, 3, {0.1}), BadArity);
  CHECK_THROWS_AS(MeasurementStrengths::tied(MeasurementKind::weak, 2, -0.1).validate(2, 2), BadStrength);
}

TEST_CASE("post-selection renormalizes and reports probability") {
  const DensityMatrix mixed({2, 2}, ComplexMatrix::Identity(4, 4) / 4.0);
  const ComplexMatrix w = build_operator(MeasurementKind::weak, 2, {0.5});
  const auto out = apply_local_pair(mixed, w, w);
  CHECK(out.success_probability == doctest::Approx((1 + 0.5) * (1 + 0.5) / 4));
  CHECK(out.state.trace() == doctest::Approx(1.0));

  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(4);
  one(3) = 1;
  const auto excited = pure_state({2, 2}, one);
  const ComplexMatrix full = build_operator(MeasurementKind::weak, 2, {1.0});
  CHECK_THROWS_AS(apply_local_pair(excited, full, full), DegenerateOutcome);
}

TEST_CASE("acceleration parameter from physical inputs") {
  CHECK(r_from_acceleration(std::numbers::pi, 1.0) == doctest::Approx(0.352513421777619));
  CHECK(r_from_acceleration(1e300, 1.0) == doctest::Approx(kMaxRindler));
  CHECK(r_from_acceleration(1e-3, 1.0) < 1e-100);
  CHECK_THROWS_AS(r_from_acceleration(0.0, 1.0), BadPhysicalParam);
  CHECK_THROWS_AS(r_from_acceleration(1.0, -1.0), BadPhysicalParam);
  CHECK_THROWS_AS((AccelerationSpec{-0.1, 0}.validate()), BadPhysicalParam);
  CHECK_THROWS_AS((AccelerationSpec{kMaxRindler + 1e-6, 0}.validate()), BadPhysicalParam);
  CHECK_NOTHROW((AccelerationSpec{kMaxRindler + 1e-13, 0}.validate()));
}

TEST_CASE("isometries match the oracle dilations") {
  for (double r : {0.0, 0.3, kMaxRindler}) {
    CHECK(oracle::max_abs(qubit_isometry({r, 0}) - oracle::qubit_dilation(r)) < 1e-15);
    for (double phi : {0.0, 1.1}) {
      CHECK(oracle::max_abs(qutrit_isometry({r, phi}) - oracle::qutrit_dilation(r, phi)) < 1e-15);
    }
  }
}

TEST_CASE("Kraus completeness on the r grid") {
  for (int k = 0; k <= 20; ++k) {
    const AccelerationSpec spec{std::numbers::pi / 80 * k, 0.4};
    const auto q = qubit_channel(spec);
    const auto t = qutrit_channel(spec);
    CHECK(q.in_dim == 2);
    CHECK(q.out_dim == 2);
    CHECK(t.in_dim == 3);
    CHECK(t.out_dim == 4);
    CHECK(q.completeness_error() <= 1e-12);
    CHECK(t.completeness_error() <= 1e-12);
  }
}

TEST_CASE("accelerate agrees with the dilation oracle and preserves states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const double r = std::uniform_real_distribution<double>(0, kMaxRindler)(rng);
    const ComplexMatrix q = oracle::random_density(4, rng);
    const auto qa = accelerate(DensityMatrix({2, 2}, q), 0, qubit_channel({r, 0}));
    CHECK(oracle::max_abs(qa.matrix() - oracle::accelerate_first(q, oracle::qubit_dilation(r), 2, 2, 2)) < 1e-14);

    const ComplexMatrix t = oracle::random_density(9, rng);
    const auto ta = accelerate(DensityMatrix({3, 3}, t), 0, qutrit_channel({r, 0.7}));
    CHECK(ta.dims() == Dims{4, 3});
    CHECK(oracle::max_abs(ta.matrix() - oracle::accelerate_first(t, oracle::qutrit_dilation(r, 0.7), 3, 3, 4)) <
          1e-14);
    CHECK(diagnose(ta.matrix()).valid());
  }
}

TEST_CASE("accelerating the second party acts on that factor only") {
  std::mt19937_64 rng(12);
  const ComplexMatrix a = oracle::random_density(2, rng);
  const ComplexMatrix b = oracle::random_density(3, rng);
  const auto channel = qutrit_channel({0.5, 0.2});
  const auto out = accelerate(DensityMatrix({2, 3}, oracle::kron(a, b)), 1, channel);
  CHECK(out.dims() == Dims{2, 4});
  const auto b_out = accelerate(DensityMatrix({3, 2}, oracle::kron(b, ComplexMatrix::Identity(2, 2) / 2.0)), 0, channel);
  const ComplexMatrix expected = oracle::kron(a, oracle::trace_out_b(b_out.matrix(), 4, 2));
  CHECK(oracle::max_abs(out.matrix() - expected) < 1e-14);
  CHECK_THROWS_AS(accelerate(DensityMatrix({2, 3}, oracle::kron(a, b)), 0, channel), DimMismatch);
  CHECK_THROWS_AS(accelerate(DensityMatrix({2, 3}, oracle::kron(a, b)), 2, channel), InvalidSubsystem);
}
