#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "s1d/line_spectrum.hpp"

using namespace s1d;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

// Even ground state of the square well of depth c: k tan k = sqrt(c - k^2).
double even_ground_omega(double c) {
  double a = 0.0, b = std::min(std::sqrt(c), pi / 2) - 1e-15;
  for (int i = 0; i < 200; ++i) {
    const double k = 0.5 * (a + b);
    (k * std::tan(k) < std::sqrt(c - k * k) ? a : b) = k;
  }
  const double k = 0.5 * (a + b);
  return std::sqrt(c - k * k);
}

}  // namespace

TEST_CASE("mismatch") {
  CHECK(mismatch(zero_potential(), 1.0) == Approx(std::sqrt(2.0)));
  CHECK(std::abs(mismatch(zero_potential(), 0.0)) < 1e-15);
  CHECK(std::abs(mismatch(square_well(pi * pi / 4), 0.0)) < 1e-12);
  CHECK(std::abs(mismatch(square_well(10.0), 0.0)) > 0.1);
  CHECK_THROWS_AS(mismatch(square_well(10.0), -1.0), DomainError);
}

TEST_CASE("mismatch is positive above the min-max bound") {
  for (const auto& q : {square_well(10.0), step_dipole(20.0), make_piecewise({-1.0, 0.3, 0.8}, {-4.0, 2.0})}) {
    const double w0 = std::sqrt(std::max(0.0, -q.min_value()));
    for (double w = w0; w < w0 + 20.0; w += 0.37) CHECK(mismatch(q, w) > 0.0);
  }
}

TEST_CASE("count_negative") {
  CHECK(count_negative(zero_potential()) == 0);
  CHECK(count_negative(square_well(10.0)) == 3);
  CHECK(count_negative(square_barrier(5.0)) == 0);
  CHECK(count_negative(square_well(pi * pi / 4)) == 1);
  CHECK(count_negative(square_well(2.0)) == 1);
  CHECK(count_negative(square_well(40.0)) == 5);
}

TEST_CASE("negative_eigenvalues of the square well") {
  CHECK(negative_eigenvalues(zero_potential()).empty());
  const auto ev = negative_eigenvalues(square_well(10.0));
  REQUIRE(ev.size() == 3);
  CHECK(ev[0].omega == Approx(even_ground_omega(10.0)).epsilon(1e-12));
  CHECK(ev[0].omega == Approx(2.931).epsilon(1e-3));
  for (int k = 0; k < 3; ++k) {
    CHECK(ev[k].node_index == k);
    CHECK(ev[k].mismatch_residual <= 1e-10);
    CHECK(ev[k].omega * ev[k].omega <= 10.0 + 1e-9);
    if (k > 0) CHECK(ev[k].omega < ev[k - 1].omega);
  }
  CHECK(negative_eigenvalues(square_well(pi * pi / 4)).size() == 1);
  CHECK_THROWS_AS(negative_eigenvalues(square_well(10.0), 0.0), DomainError);
}

TEST_CASE("regge_eigenvalues agree with the bound states") {
  CHECK(regge_eigenvalues(zero_potential()).empty());
  CHECK(regge_eigenvalues(square_well(pi * pi / 4)).size() == 1);
  std::vector<Potential> suite{square_well(10.0), square_well(40.0), step_dipole(20.0),
                               make_piecewise({-0.5, 0.2}, {-30.0})};
  for (const auto& q : suite) {
    const auto ev = negative_eigenvalues(q);
    const auto rg = regge_eigenvalues(q);
    REQUIRE(ev.size() == rg.size());
    for (std::size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k].omega - rg[k]) <= 1e-10);
  }
  // supports outside [-1, 1] are accepted as they are
  const auto wide = make_piecewise({-3.0, 2.0}, {-1.0});
  CHECK(regge_eigenvalues(wide).size() == negative_eigenvalues(wide).size());
}

TEST_CASE("eigenfunction invariants") {
  for (const auto& q : {square_well(10.0), step_dipole(60.0), make_piecewise({-2.0, -1.0, 0.5, 3.0}, {-3.0, 5.0, -8.0})}) {
    for (const auto& s : negative_eigenvalues(q)) {
      const auto ef = eigenfunction(q, s.omega);
      CHECK(ef.norm() == Approx(1.0).epsilon(1e-8));
      CHECK(ef.tail_amplitudes().first > 0.0);
      CHECK(ef.tail_rate() == s.omega);
      CHECK(ef.matching_residual() <= 1e-9);
      CHECK(ef.solution().count_zeros() == s.node_index);
      const auto& v = ef.solution();
      for (double x : v.grid()) {
        const auto l = v.at_left(x), r = v.at(x);
        CHECK(std::abs(l[0] - r[0]) <= 1e-9 * (1.0 + std::abs(r[0])));
        CHECK(std::abs(l[1] - r[1]) <= 1e-9 * (1.0 + std::abs(r[1])));
      }
      // tails are exact exponentials
      const auto [am, ap] = ef.tail_amplitudes();
      CHECK(ef.value(v.left() - 1.0) == Approx(am * std::exp(-s.omega)).epsilon(1e-14));
      CHECK(ef.value(v.right() + 2.0) == Approx(ap * std::exp(-2.0 * s.omega)).epsilon(1e-14));
    }
  }
}

TEST_CASE("eigenfunction of the square well ground state matches the closed form") {
  const double c = 10.0;
  const double w = even_ground_omega(c), k = std::sqrt(c - w * w);
  const auto ef = eigenfunction(square_well(c), w);
  // v = A cos(k x) inside, A cos(k) e^{-w(|x|-1)} outside
  const double norm2 = 1.0 + std::sin(2 * k) / (2 * k) + std::cos(k) * std::cos(k) / w;
  const double A = 1.0 / std::sqrt(norm2);
  for (double x : {-3.0, -1.0, -0.4, 0.0, 0.7, 1.0, 2.5}) {
    const double expect = std::abs(x) <= 1.0 ? A * std::cos(k * x)
                                             : A * std::cos(k) * std::exp(-w * (std::abs(x) - 1.0));
    CHECK(ef.value(x) == Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("half_bound_state") {
  const auto z = half_bound_state(zero_potential());
  REQUIRE(z);
  CHECK(z->theta == Approx(1.0));
  const auto w = half_bound_state(square_well(pi * pi / 4));
  REQUIRE(w);
  CHECK(w->v_minus == 1.0);
  CHECK(w->theta == Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(w->solution.derivative(1.0)) < 1e-9);
  CHECK(std::abs(w->solution.derivative(-3.0)) < 1e-9);
  CHECK_FALSE(half_bound_state(square_well(10.0)));
}

TEST_CASE("theta_eta") {
  const auto v = square_well(pi * pi / 4);
  const auto u = constant_potential(-1.0, -1.0, 1.0);
  const auto [theta, eta] = theta_eta(v, u);
  CHECK(theta == Approx(-1.0).epsilon(1e-12));
  CHECK(eta == Approx(1.0).epsilon(1e-12));
  CHECK(theta_eta(v, zero_potential()).second == 0.0);
  const auto hbs = *half_bound_state(v);
  const auto [t2, e2] = theta_eta(hbs.scaled(2.0), u);
  CHECK(t2 == Approx(theta).epsilon(1e-14));
  CHECK(e2 == Approx(eta).epsilon(1e-14));
  CHECK_THROWS_AS(theta_eta(square_well(10.0), u), DomainError);
}

TEST_CASE("resonance_set") {
  const auto r = resonance_set(square_well(10.0), 0.0, 1.0);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - pi * pi / 40) <= 1e-8);
  CHECK(std::abs(r[1] - pi * pi / 10) <= 1e-8);
  CHECK(resonance_set(square_barrier(5.0), 0.0, 1.0).empty());
  CHECK(resonance_set(square_well(10.0), 0.0, 0.2).empty());
  // negative couplings of a barrier act like a well
  const auto b = resonance_set(square_barrier(10.0), -1.0, 0.0);
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b[0] + pi * pi / 10) <= 1e-8);
  CHECK_THROWS_AS(resonance_set(square_well(10.0), 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(resonance_set(zero_potential(), 0.0, 1.0), DomainError);
}
