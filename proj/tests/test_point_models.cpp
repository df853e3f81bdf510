#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s1d/point_models.hpp"

using namespace s1d;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("jump matrices") {
  const auto d = InterfaceParams::delta(-2.0).jump();
  CHECK(d(0, 0) == 1.0);
  CHECK(d(1, 0) == -2.0);
  CHECK(d(0, 1) == 0.0);
  const auto t = InterfaceParams::theta_eta(2.0, -5.0).jump();
  CHECK(t(0, 0) == 2.0);
  CHECK(t(1, 1) == 0.5);
  CHECK(t(1, 0) == -5.0);
  CHECK_THROWS_AS(InterfaceParams::theta_eta(0.0, 1.0).jump(), DomainError);
  CHECK_THROWS_AS(InterfaceParams::delta(NAN).jump(), DomainError);
}

TEST_CASE("closed forms") {
  CHECK(*closed_form(InterfaceParams::delta(-2.0)) == -1.0);
  CHECK_FALSE(closed_form(InterfaceParams::delta(0.0)));
  CHECK_FALSE(closed_form(InterfaceParams::delta(3.0)));
  CHECK(*closed_form(InterfaceParams::theta_eta(2.0, -5.0)) == Approx(-4.0));
  CHECK(*closed_form(InterfaceParams::theta_eta(-1.0, 1.0)) == Approx(-0.25));
  CHECK_FALSE(closed_form(InterfaceParams::theta_eta(2.0, 5.0)));
  CHECK_FALSE(closed_form(InterfaceParams::theta_eta(2.0, 0.0)));
  // theta = 1 is the delta interaction
  for (double a : {-3.0, -0.5, 0.7}) {
    const auto c1 = closed_form(InterfaceParams::theta_eta(1.0, a));
    const auto c2 = closed_form(InterfaceParams::delta(a));
    REQUIRE(c1.has_value() == c2.has_value());
    if (c1) CHECK(*c1 == Approx(*c2));
  }
}

TEST_CASE("interface spectrum matches the closed forms for W = 0") {
  const auto w = zero_potential();
  struct Case {
    InterfaceParams j;
    int count;
  };
  for (const auto& c : {Case{InterfaceParams::delta(-2.0), 1}, Case{InterfaceParams::delta(1.0), 0},
                        Case{InterfaceParams::theta_eta(2.0, -5.0), 1},
                        Case{InterfaceParams::theta_eta(-1.0, 1.0), 1},
                        Case{InterfaceParams::theta_eta(-3.0, -2.0), 0},
                        Case{InterfaceParams::theta_eta(0.5, 0.0), 0}}) {
    const auto s = interface_spectrum(w, c.j, 1e-15);
    REQUIRE(static_cast<int>(s.size()) == c.count);
    if (c.count == 1) CHECK(std::abs(s[0].lambda() - *closed_form(c.j)) <= 1e-10);
  }
  CHECK_THROWS_AS(interface_spectrum(w, InterfaceParams::delta(-1.0), 0.0), DomainError);
}

TEST_CASE("interface eigenfunction satisfies the jump") {
  const auto j = InterfaceParams::delta(-2.0);
  const auto ef = interface_eigenfunction(zero_potential(), j, 1.0);
  CHECK(ef.norm() == Approx(1.0).epsilon(1e-10));
  CHECK(ef.value(0.5) == Approx(std::exp(-0.5)).epsilon(1e-10));
  CHECK(ef.value(-2.0) == Approx(std::exp(-2.0)).epsilon(1e-10));

  const auto jt = InterfaceParams::theta_eta(2.0, -5.0);
  const auto w = square_well(1.0);
  const auto s = interface_spectrum(w, jt);
  REQUIRE(!s.empty());
  const auto e = interface_eigenfunction(w, jt, s[0].omega);
  const auto left = e.solution().at_left(0.0);
  const auto right = e.solution().at(0.0);
  const Eigen::Vector2d mapped = jt.jump() * left;
  CHECK(right[0] == Approx(mapped[0]).epsilon(1e-9));
  CHECK(right[1] == Approx(mapped[1]).epsilon(1e-9));
}

TEST_CASE("interface spectrum over a background well") {
  // A delta at the center of a well lies below the bare well.
  const auto w = square_well(2.0);
  const auto bare = interface_spectrum(w, InterfaceParams::delta(0.0));
  const auto with = interface_spectrum(w, InterfaceParams::delta(-1.0));
  REQUIRE(bare.size() == 1);
  REQUIRE(!with.empty());
  CHECK(with[0].lambda() < bare[0].lambda());
  CHECK(with[0].mismatch_residual < 1e-9);
}

TEST_CASE("threshold alpha0") {
  CHECK(threshold_alpha0(sine_moment(1.0)).alpha0 == Approx(-2.0).epsilon(1e-14));
  CHECK(threshold_alpha0(harmonic_moment(2.0)).alpha0 == Approx(-2.0).epsilon(1e-14));
  const auto r = threshold_alpha0(constant_potential(1.0, -1.0, 1.0));
  CHECK(r.alpha0 == Approx(-1.8331251662114).epsilon(1e-12));
  CHECK(std::abs(r.f_residual) < 1e-12);
  // f(alpha) = alpha + 2 moment(alpha) vanishes at the result
  const double a = r.alpha0;
  const double m = 2.0 * (std::exp(a) - 1.0) / a;
  CHECK(std::abs(a + 2.0 * m) < 1e-12);
  // W = 0 puts the threshold at 0
  CHECK(threshold_alpha0(zero_potential()).alpha0 == 0.0);
  CHECK_THROWS_AS(threshold_alpha0(sine_moment(1.0), -1.0), DomainError);
  CHECK_THROWS_AS(threshold_alpha0([](double) { return NAN; }), DomainError);
}

TEST_CASE("resonant condition") {
  const auto v = square_well(pi * pi / 4);
  const auto u = constant_potential(-1.0, -1.0, 1.0);
  const auto c = check_resonant_condition(v, u, zero_potential());
  CHECK(c.holds);
  CHECK(c.lhs == 0.0);
  CHECK(c.rhs == Approx(0.5).epsilon(1e-10));
  CHECK_FALSE(check_resonant_condition(v, zero_potential(), zero_potential()).holds);
  CHECK_FALSE(check_resonant_condition(v, u, constant_potential(10.0, -1.0, 1.0)).holds);
  CHECK_THROWS_AS(check_resonant_condition(square_well(10.0), u, zero_potential()), DomainError);
}
