#include <doctest.h>

#include "oracles.hpp"
#include "unruhlab/states.hpp"

using namespace unruhlab;

TEST_CASE("X-state matches the Pauli expansion") {
  for (auto s : {XStateSpec{-1, -1, -1}, XStateSpec{-0.7, -0.7, -0.7}, XStateSpec{0.3, -0.2, 0.5},
                 XStateSpec{1, -1, 1}}) {
    const auto rho = make_x_state(s);
    CHECK(rho.dims() == Dims{2, 2});
    CHECK(oracle::max_abs(rho.matrix() - oracle::x_state(s.c11, s.c22, s.c33)) < 1e-15);
  }
}

TEST_CASE("singlet and Werner presets") {
  const auto w = x_state_weights(singlet_spec());
  CHECK(w.b1 == 0.0);
  CHECK(w.b3 == 0.5);
  CHECK(w.b4 == -0.5);
  const auto werner = make_x_state(werner_spec(0.7));
  const RealVector ev = hermitian_eigenvalues(werner.matrix());
  CHECK(ev(0) == doctest::Approx(0.075));
  CHECK(ev(3) == doctest::Approx(0.775));
}

TEST_CASE("non-physical correlation triples are rejected") {
  CHECK_THROWS_AS(make_x_state({1, 1, 1}), NotPositive);
  CHECK_THROWS_AS(make_x_state({-1, -1, 0.5}), NotPositive);
}

TEST_CASE("qutrit state") {
  const auto mes = make_qutrit_state({1.0});
  CHECK(mes.dims() == Dims{3, 3});
  CHECK(oracle::max_abs(mes.matrix() - oracle::qutrit_pure(1.0)) < 1e-15);
  CHECK(oracle::max_abs(make_qutrit_state({0.5}).matrix() - oracle::qutrit_pure(0.5)) < 1e-15);
  CHECK(make_qutrit_state({0.0}).matrix()(8, 8) == 0.0);
  CHECK_THROWS_AS(make_qutrit_state({-0.1}), InvalidState);
}

TEST_CASE("preset parsing") {
  CHECK(parse_state_preset("singlet").system() == SystemKind::two_qubit);
  CHECK(parse_state_preset("qutrit:0.5").system() == SystemKind::two_qutrit);
  const auto w = std::get<XStateSpec>(parse_state_preset("werner:0.7").spec);
  CHECK(w.c33 == doctest::Approx(-0.7));
  const auto x = std::get<XStateSpec>(parse_state_preset("x:0.1,-0.2,0.3").spec);
  CHECK(x.c22 == doctest::Approx(-0.2));
  CHECK(parse_state_preset("werner:0.7").build().dim() == 4);
  CHECK_THROWS_AS(parse_state_preset("bell"), UnknownPreset);
  CHECK_THROWS_AS(parse_state_preset("werner:abc"), UnknownPreset);
  CHECK_THROWS_AS(parse_state_preset("x:0.1,0.2"), UnknownPreset);
}
