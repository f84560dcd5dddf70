#include <doctest.h>

#include "concavity/errors.hpp"
#include "concavity/jet.hpp"
#include "helpers.hpp"

using namespace concavity;

TEST_CASE("multiply") {
  const Jet2 b{{0.3, 1}, {2, -1}, {-4, 0.5}};
  check_jet(jet_multiply(Jet2::constant(1.0), b), b.f, b.df, b.d2f);
  check_jet(jet_multiply(Jet2::variable(2.0), Jet2::variable(2.0)), 4.0, 4.0, 2.0);
  check_jet(jet_multiply({{1, 1}, 1.0, 0.0}, {{1, -1}, 1.0, 0.0}), 2.0, 2.0, 2.0);
}

TEST_CASE("multiply is commutative and associative") {
  std::mt19937_64 rng(11);
  auto jet = [&] { return Jet2{random_point(rng, 3), random_point(rng, 3), random_point(rng, 3)}; };
  for (int i = 0; i < 500; ++i) {
    const Jet2 a = jet(), b = jet(), c = jet();
    const Jet2 ab = a * b, ba = b * a;
    check_jet(ab, ba.f, ba.df, ba.d2f, 1e-12);
    const Jet2 l = (a * b) * c, r = a * (b * c);
    CHECK(std::abs(l.f - r.f) <= 1e-12 * (1 + std::abs(l.f)));
    CHECK(std::abs(l.df - r.df) <= 1e-12 * (1 + std::abs(l.df)));
    CHECK(std::abs(l.d2f - r.d2f) <= 1e-12 * (1 + std::abs(l.d2f)));
  }
}

TEST_CASE("divide") {
  check_jet(jet_divide(Jet2::constant(6.0), Jet2::constant(3.0)), 2.0, 0.0, 0.0);
  check_jet(jet_divide(Jet2::variable(0.5), Jet2::constant(1.0)), 0.5, 1.0, 0.0);
  check_jet(jet_divide(Jet2::constant(1.0), Jet2::variable(0.5)), 2.0, -4.0, 16.0);
}

TEST_CASE("divide near zero raises NearPole") {
  try {
    jet_divide(Jet2::constant(1.0), Jet2::constant(1e-16));
    FAIL("expected NearPole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NearPole);
  }
}

TEST_CASE("real powers") {
  check_jet(jet_power_real(Jet2::constant(1.0), 7.0), 1.0, 0.0, 0.0);
  check_jet(jet_power_real({4.0, 1.0, 0.0}, 0.5), 2.0, 0.25, -0.03125);
  check_jet(jet_power_real({1.0, -1.0, 0.0}, -2.0), 1.0, 2.0, 6.0);
}

TEST_CASE("real power on the branch cut raises BranchCut") {
  for (Complex u : {Complex(-1.0, 0.0), Complex(-2.0, 1e-13), Complex(0.0, 0.0)}) {
    try {
      jet_power_real({u, 1.0, 0.0}, 0.5);
      FAIL("expected BranchCut");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BranchCut);
    }
  }
  CHECK_NOTHROW(jet_power_real({{-1.0, 1e-6}, 1.0, 0.0}, 0.5));
}

TEST_CASE("integer power, exp and log agree with their series") {
  const Complex z(0.3, -0.2);
  const Jet2 x = Jet2::variable(z);
  const Jet2 cube = jet_power_int(x, 3);
  check_jet(cube, z * z * z, 3.0 * z * z, 6.0 * z);
  const Jet2 inv = jet_power_int(x, -2);
  check_jet(inv, 1.0 / (z * z), -2.0 / (z * z * z), 6.0 / (z * z * z * z));
  check_jet(jet_exp(x), std::exp(z), std::exp(z), std::exp(z));
  check_jet(jet_log(1.0 + x), std::log(1.0 + z), 1.0 / (1.0 + z), -1.0 / ((1.0 + z) * (1.0 + z)));
  const Jet2 round = jet_exp(jet_log(1.0 + x));
  check_jet(round, 1.0 + z, 1.0, 0.0);
}
