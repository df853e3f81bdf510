#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "s1d/propagator.hpp"

using namespace s1d;
using doctest::Approx;

TEST_CASE("piece_propagator closed forms") {
  auto free = piece_propagator(0.0, 2.5);
  auto v = free.value();
  CHECK(v(0, 0) == Approx(1.0));
  CHECK(v(0, 1) == Approx(2.5));
  CHECK(v(1, 0) == Approx(0.0));
  CHECK(v(1, 1) == Approx(1.0));

  auto hyp = piece_propagator(1.0, std::log(4.0)).value();
  CHECK(hyp(0, 0) == Approx(17.0 / 8.0).epsilon(1e-14));
  CHECK(hyp(0, 1) == Approx(15.0 / 8.0).epsilon(1e-14));
  CHECK(hyp(1, 0) == Approx(15.0 / 8.0).epsilon(1e-14));

  auto quarter = piece_propagator(-1.0, std::numbers::pi / 2).value();
  CHECK(std::abs(quarter(0, 0)) < 1e-15);
  CHECK(quarter(0, 1) == Approx(1.0));
  CHECK(quarter(1, 0) == Approx(-1.0));

  CHECK_THROWS_AS(piece_propagator(1.0, -0.1), DomainError);
}

TEST_CASE("normalization keeps entries near one") {
  for (double m : {-400.0, -1.0, 0.0, 1e-12, 3.0, 900.0}) {
    for (double L : {0.0, 1e-6, 0.3, 5.0}) {
      const auto p = piece_propagator(m, L);
      const double peak = p.m.cwiseAbs().maxCoeff();
      CHECK(peak >= 0.5);
      CHECK(peak <= 2.0);
      // det = 1 survives normalization only while e^{-2 mu L} is resolvable
      if (m * L * L <= 4.0) CHECK(std::abs(p.determinant() - 1.0) < 1e-12);
    }
  }
  // stiff: e^{mu L} far beyond double range stays finite
  const auto stiff = piece_propagator(1e6, 10.0);
  CHECK(std::isfinite(stiff.logscale));
  CHECK(stiff.logscale == Approx(1e4 + std::log(500.0)).epsilon(1e-12));
}

TEST_CASE("Taylor branch is continuous with the closed forms") {
  for (double L : {0.5, 1.0, 2.0}) {
    const double m0 = 0.99e-8 / (L * L), m1 = 1.01e-8 / (L * L);
    for (double s : {1.0, -1.0}) {
      const auto a = piece_propagator(s * m0, L).value();
      const auto b = piece_propagator(s * m1, L).value();
      CHECK((a - b).norm() < 1e-9);
    }
  }
}

TEST_CASE("propagate") {
  const auto zero = zero_potential();
  auto s = propagate(zero, -1.0, -1.0, 1.0, State<double>(1.0, 1.0));
  CHECK(s.u() == Approx(std::sqrt(0.5)));
  CHECK(s.du() == Approx(std::sqrt(0.5)));
  CHECK(s.logscale == Approx(2.0 + std::log(std::sqrt(2.0))));

  const auto w = square_well(10.0);
  const double k = std::sqrt(10.0);
  s = propagate(w, 0.0, -1.0, 1.0, State<double>(1.0, 0.0));
  const double tu = s.u() * std::exp(s.logscale), tdu = s.du() * std::exp(s.logscale);
  CHECK(tu == Approx(std::cos(2 * k)).epsilon(1e-13));
  CHECK(tdu == Approx(-k * std::sin(2 * k)).epsilon(1e-13));

  const State<double> init(0.3, -0.2, 1.5);
  const auto same = propagate(w, -3.0, 0.4, 0.4, init);
  CHECK(same.y == init.y);
  CHECK(same.logscale == init.logscale);
  CHECK_THROWS_AS(propagate(w, 0.0, 1.0, 0.0, init), DomainError);
}

TEST_CASE("composition and reversibility") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> bp{-1.0}, v;
    for (int j = 0; j < 4; ++j) {
      bp.push_back(bp.back() + 0.1 + 0.5 * std::abs(u(rng)));
      v.push_back(30.0 * u(rng));
    }
    const auto p = make_piecewise(bp, v);
    const double lambda = -20.0 * std::abs(u(rng));
    const double a = p.left() - 0.3, c = p.right() + 0.2, b = a + (c - a) * (0.5 + 0.4 * u(rng));
    const State<double> init(u(rng), u(rng));
    const auto whole = propagate(p, lambda, a, c, init);
    const auto split = propagate(p, lambda, b, c, propagate(p, lambda, a, b, init));
    const double scale = std::exp(split.logscale - whole.logscale);
    CHECK((whole.y - split.y * scale).norm() <= 1e-10 * whole.y.norm());

    // step back piece by piece
    State<double> s = init.normalized();
    std::vector<ScaledMatrix<double>> mats;
    double growth = 0.0;
    detail::for_each_segment(p, a, c, [&](double q, double x0, double x1) {
      growth += std::sqrt(std::max(0.0, q - lambda)) * (x1 - x0);
      mats.push_back(piece_propagator(q - lambda, x1 - x0));
      s = mats.back() * s;
    });
    for (auto it = mats.rbegin(); it != mats.rend(); ++it) s = it->inverse() * s;
    const auto n = init.normalized();
    // the decaying component is lost at rate e^{2 growth}
    CHECK((s.y * std::exp(s.logscale - n.logscale) - n.y).norm() <= 1e-13 * std::exp(2.0 * growth));
  }
}

TEST_CASE("piece_zeros") {
  const double pi = std::numbers::pi;
  // cos(s) on [0, 2 pi]: zeros at pi/2, 3 pi/2
  CHECK(piece_zeros(-1.0, 2 * pi, 1.0, 0.0, false).count == 2);
  // sin(s): zero at 0 is excluded, zeros at pi and 2 pi counted
  auto z = piece_zeros(-1.0, 2 * pi, 0.0, 1.0, false);
  CHECK(z.count == 2);
  CHECK(z.at_end);
  CHECK(piece_zeros(-1.0, 2 * pi, 0.0, 1.0, true).count == 2);
  // hyperbolic: cosh(s) - 2 sinh(s) vanishes at atanh(1/2)
  CHECK(piece_zeros(1.0, 1.0, 1.0, -2.0, false).count == 1);
  CHECK(piece_zeros(1.0, 0.5, 1.0, -2.0, false).count == 0);
  CHECK(piece_zeros(1.0, 5.0, 1.0, -0.5, false).count == 0);
  // linear
  CHECK(piece_zeros(0.0, 1.0, 1.0, -2.0, false).count == 1);
  CHECK(piece_zeros(0.0, 1.0, 1.0, -0.5, false).count == 0);
}

TEST_CASE("propagate_nodes") {
  auto r = propagate_nodes(zero_potential(), 0.0, State<double>(1.0, 0.0));
  CHECK(r.nodes == 0);
  CHECK(r.state.u() == Approx(1.0));
  CHECK(r.state.du() == Approx(0.0));

  r = propagate_nodes(square_well(10.0), 0.0, State<double>(1.0, 0.0));
  CHECK(r.nodes == 2);
  r = propagate_nodes(square_well(10.0), -8.59, State<double>(1.0, std::sqrt(8.59)));
  CHECK(r.nodes == 0);
  CHECK_THROWS_AS(propagate_nodes(square_well(10.0), 0.0, State<double>(0.0, 0.0)), DomainError);

  // a zero exactly on an interior breakpoint counts once
  const double pi = std::numbers::pi;
  const auto p = make_piecewise({0.0, pi / 2, pi}, {-1.0, -1.0});
  r = propagate_nodes(p, 0.0, State<double>(1.0, 0.0));
  CHECK(r.nodes == 1);
}

TEST_CASE("node count is nondecreasing in lambda") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-50.0, 50.0), len(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> bp{0.0}, v;
    for (int j = 0; j < 6; ++j) {
      bp.push_back(bp.back() + len(rng));
      v.push_back(u(rng));
    }
    const auto p = make_piecewise(bp, v);
    int prev = -1;
    for (int j = 0; j <= 50; ++j) {
      const double lambda = -60.0 + 60.0 * j / 50.0;
      const int n = propagate_nodes(p, lambda, State<double>(1.0, std::sqrt(-lambda))).nodes;
      CHECK(n >= prev);
      prev = n;
    }
  }
}
