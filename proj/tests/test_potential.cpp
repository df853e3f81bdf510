#include <doctest.h>

#include <random>

#include "s1d/potential.hpp"
#include "s1d/potential_io.hpp"

using namespace s1d;

namespace {

std::vector<double> vec(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

TEST_CASE("make_piecewise validates its input") {
  const auto w = make_piecewise({-1.0, 1.0}, {-10.0});
  CHECK(w(0.0) == -10.0);
  CHECK(w(-1.5) == 0.0);
  CHECK(w(1.0000001) == 0.0);
  CHECK(w.support_length() == 2.0);

  const auto d = make_piecewise({-1.0, 0.0, 1.0}, {8.0, -8.0});
  CHECK(d(-0.5) == 8.0);
  CHECK(d(0.5) == -8.0);

  CHECK_THROWS_AS(make_piecewise({0.0, 0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(make_piecewise({1.0, 0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(make_piecewise({0.0, 1.0, 2.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(make_piecewise(std::vector<double>{0.0}, std::vector<double>{}), DomainError);
}

TEST_CASE("adjacent equal values are kept") {
  const auto p = make_piecewise({-1.0, 0.0, 1.0}, {2.0, 2.0});
  CHECK(p.pieces() == 2);
}

TEST_CASE("scale is exact on the representation") {
  const auto d = scale(step_dipole(8.0), 0.5, 2);
  CHECK(vec(d.breakpoints()) == std::vector<double>{-0.5, 0.0, 0.5});
  CHECK(vec(d.values()) == std::vector<double>{32.0, -32.0});

  const auto w = scale(square_well(10.0), 0.1, 2);
  CHECK(w.values()[0] == doctest::Approx(-1000.0).epsilon(1e-14));
  CHECK(w.left() == doctest::Approx(-0.1));

  const auto p = make_piecewise({-0.3, 0.2, 0.9}, {1.5, -2.0});
  CHECK(scale(p, 1.0, 1) == p);
  CHECK_THROWS_AS(scale(p, 0.0, 2), DomainError);
  CHECK_THROWS_AS(scale(p, -1.0, 1), DomainError);
  CHECK_THROWS_AS(scale(p, 1.0, 3), DomainError);

  // powers of two keep the composition bit-exact
  CHECK(scale(scale(p, 0.5, 2), 0.25, 2) == scale(p, 0.125, 2));
  CHECK(moment(scale(p, 0.25, 2), 0) == doctest::Approx(moment(p, 0) / 0.25).epsilon(1e-14));
}

TEST_CASE("sum merges breakpoints") {
  const auto s = sum<double>({square_well(10.0), make_piecewise({-0.5, 0.5}, {3.0})});
  CHECK(vec(s.breakpoints()) == std::vector<double>{-1.0, -0.5, 0.5, 1.0});
  CHECK(vec(s.values()) == std::vector<double>{-10.0, -7.0, -10.0});

  const auto p = step_dipole(8.0);
  CHECK(sum<double>({p, zero_potential(-3.0, 3.0)}) == p);
  const auto z = sum<double>({p, -p});
  CHECK(z.is_zero());
  CHECK(z.left() == -1.0);
  CHECK(z.right() == 1.0);

  // near-coincident breakpoints merge
  const auto a = make_piecewise({-1.0, 1.0}, {1.0});
  const auto b = make_piecewise({-1.0 + 1e-15, 1.0}, {1.0});
  CHECK((a + b).pieces() == 1);
}

TEST_CASE("sum is commutative and associative pointwise") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto random = [&] {
    double x = u(rng);
    std::vector<double> bp{x}, v;
    for (int i = 0; i < 3; ++i) {
      bp.push_back(bp.back() + 0.1 + std::abs(u(rng)));
      v.push_back(u(rng));
    }
    return make_piecewise(bp, v);
  };
  for (int i = 0; i < 50; ++i) {
    const auto a = random(), b = random(), c = random();
    const auto s1 = (a + b) + c;
    const auto s2 = a + (c + b);
    for (int j = 0; j < 40; ++j) {
      const double x = 3.0 * u(rng);
      CHECK(s1(x) == doctest::Approx(a(x) + b(x) + c(x)).epsilon(1e-12));
      CHECK(s2(x) == doctest::Approx(s1(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("moments") {
  CHECK(moment(step_dipole(5.0), 0) == 0.0);
  CHECK(moment(step_dipole(8.0), 1) == doctest::Approx(-8.0));
  CHECK(moment(square_well(10.0), 1, MomentKind::negative_part_abs) == doctest::Approx(10.0));
  CHECK(moment(step_dipole(8.0), 1, MomentKind::negative_part_abs) == doctest::Approx(4.0));
  CHECK(moment(square_barrier(5.0), 1, MomentKind::negative_part_abs) == 0.0);
  const auto p = make_piecewise({-0.7, 0.1, 1.3}, {3.0, -1.25});
  CHECK(moment(p, 0) + moment(-p, 0) == 0.0);
  CHECK(moment(p, 2) == doctest::Approx(3.0 * (0.001 + 0.343) / 3.0 - 1.25 * (2.197 - 0.001) / 3.0));
  CHECK_THROWS_AS(moment(p, -1), DomainError);
}

TEST_CASE("integral and exp_moment") {
  const auto p = make_piecewise({-1.0, 0.0, 1.0}, {2.0, -3.0});
  CHECK(integral(p, -5.0, 5.0) == doctest::Approx(-1.0));
  CHECK(integral(p, -0.5, 0.25) == doctest::Approx(1.0 - 0.75));
  const auto w = constant_potential(1.0, -1.0, 1.0);
  const double a = -1.7;
  CHECK(exp_moment(w, a) == doctest::Approx(2.0 * (std::exp(a) - 1.0) / a).epsilon(1e-14));
  CHECK(exp_moment(w, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("builtin families") {
  PotentialSpec s;
  s.kind = PotentialKind::square_well;
  s.params["depth"] = 10.0;
  CHECK(builtin(s) == make_piecewise({-1.0, 1.0}, {-10.0}));
  s = {PotentialKind::step_dipole, {{"height", 8.0}}, {}, {}};
  CHECK(builtin(s) == make_piecewise({-1.0, 0.0, 1.0}, {8.0, -8.0}));
  s = {PotentialKind::square_barrier, {{"height", 5.0}}, {}, {}};
  CHECK(builtin(s) == make_piecewise({-1.0, 1.0}, {5.0}));
  s = {PotentialKind::double_step, {{"left", 1.0}, {"right", -2.0}, {"half_width", 0.5}}, {}, {}};
  CHECK(builtin(s) == make_piecewise({-0.5, 0.0, 0.5}, {1.0, -2.0}));
  s = {PotentialKind::square_well, {{"depth", -1.0}}, {}, {}};
  CHECK_THROWS_AS(builtin(s), DomainError);
  s = {PotentialKind::square_well, {}, {}, {}};
  CHECK_THROWS_AS(builtin(s), DomainError);
  CHECK_THROWS_AS(parse_kind("triangle"), DomainError);
}

TEST_CASE("JSON round trip is bit-exact") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> bp{u(rng)}, v;
    for (int j = 0; j < 5; ++j) {
      bp.push_back(bp.back() + std::abs(u(rng)) * 1e-3 + 1e-9);
      v.push_back(u(rng) * 1e-7);
    }
    const auto p = make_piecewise(bp, v);
    CHECK(parse_potential(to_json(p).dump()) == p);
  }
  const auto w = parse_potential(R"({"kind":"square_well","params":{"depth":10.0}})");
  CHECK(w == square_well(10.0));
  PotentialSpec c{PotentialKind::custom, {}, {-1.0, 0.5, 2.0}, {0.1, 0.2}};
  CHECK(potential_from_json(to_json(c)) == make_piecewise({-1.0, 0.5, 2.0}, {0.1, 0.2}));
  CHECK_THROWS_AS(parse_potential("{"), DomainError);
  CHECK_THROWS_AS(parse_potential(R"({"breakpoints":[0,1]})"), DomainError);
  CHECK_THROWS_AS(parse_potential("@/nonexistent/file.json"), DomainError);
}
