#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypergeo/multiplicity.hpp"
#include "hypergeo/rootsystem.hpp"
#include "oracles.hpp"

using namespace hypergeo;

TEST_CASE("rho(k) pairings", "[weights]") {
  auto A1 = build_root_system("A1");
  auto k = MultiplicityFunction::equal(A1, Rational(-2, 5));
  auto rho = rho_weight(A1, k);
  REQUIRE(rho[0] == Rational(-2, 5));  // rho(k)(alpha^vee) = k

  auto kz = MultiplicityFunction::equal(A1, Rational(0));
  REQUIRE(is_zero(rho_ambient(A1, kz)));

  auto A2 = build_root_system("A2");
  auto k2 = MultiplicityFunction::equal(A2, Rational(-1, 4));
  auto rho2 = rho_weight(A2, k2);
  REQUIRE(rho2[0] == Rational(-1, 4));
  REQUIRE(rho2[1] == Rational(-1, 4));
  REQUIRE(A2.pair_root(rho2, A2.highest_root) == Rational(-1, 2));  // 2k on theta
}

TEST_CASE("rho is W-equivariant through the choice of positive system", "[weights]") {
  auto A2 = build_root_system("A2");
  auto k = MultiplicityFunction::equal(A2, Rational(-1, 3));
  QVec rho = rho_ambient(A2, k);
  for (int w = 0; w < A2.weyl_order(); ++w) {
    // half-sum over w(R_+) equals w(rho)
    QVec s(A2.ambient, Rational(0));
    for (int r : A2.positive) {
      int img = A2.weyl_root_perm[w][r];
      s = add(s, scale(A2.roots[img], k.k_root(img) / 2));
    }
    REQUIRE(s == mat_vec(A2.weyl[w], rho));
  }
}

TEST_CASE("delta density values and wall contract", "[weights]") {
  auto A1 = build_root_system("A1");
  auto k = MultiplicityFunction::equal(A1, Rational(-1, 4));
  // x with alpha(x) = 2: delta = (2 sinh 1)^(-1/2)
  auto x = A1.chamber_point({-2.0});  // alpha_1(x) = +2
  REQUIRE(A1.root_value_at(A1.simple[0], x) == Catch::Approx(2.0).margin(1e-14));
  REQUIRE(delta_density(A1, k, x) ==
          Catch::Approx(std::pow(2.0 * std::sinh(1.0), -0.5)).epsilon(1e-14));

  auto kz = MultiplicityFunction::equal(A1, Rational(0));
  REQUIRE(delta_density(A1, kz, x) == 1.0);

  std::vector<double> wall(A1.ambient, 0.0);
  REQUIRE(std::isinf(delta_density(A1, k, wall)));
  auto kp = MultiplicityFunction::equal(A1, Rational(1, 3));
  REQUIRE(delta_density(A1, kp, wall) == 0.0);
}

TEST_CASE("delta is W-invariant at random points", "[weights]") {
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (auto label : {"A2", "B2", "G2"}) {
    auto R = build_root_system(label);
    auto k = MultiplicityFunction::equal(R, Rational(-1, 5));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> t(R.rank);
      for (auto& v : t) v = u(rng);
      auto x = R.chamber_point(t);
      double d0 = delta_density(R, k, x);
      for (int w = 0; w < R.weyl_order(); ++w) {
        std::vector<double> wx(R.ambient, 0.0);
        for (int i = 0; i < R.ambient; ++i)
          for (int j = 0; j < R.ambient; ++j)
            wx[i] += to_double(R.weyl[w][i][j]) * x[j];
        REQUIRE(delta_density(R, k, wx) == Catch::Approx(d0).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("integrability gate", "[weights]") {
  auto A1 = build_root_system("A1");
  auto rep = check_integrability(A1, MultiplicityFunction::equal(A1, Rational(-2, 5)));
  REQUIRE(rep.condition_1_6);
  REQUIRE(rep.margin == Rational(1, 5));  // 2k+1 = 0.2

  auto rep2 = check_integrability(A1, MultiplicityFunction::equal(A1, Rational(-1, 2)));
  REQUIRE_FALSE(rep2.condition_1_6);
  REQUIRE(rep2.margin == 0);

  auto A2 = build_root_system("A2");
  auto rep3 = check_integrability(A2, MultiplicityFunction::equal(A2, Rational(-3, 10)));
  REQUIRE(rep3.condition_1_6);
  REQUIRE(rep3.margin == Rational(1, 10));  // 3k+1

  auto G2 = build_root_system("G2");
  auto rep4 = check_integrability(G2, MultiplicityFunction::equal(G2, Rational(-1, 20)));
  REQUIRE(rep4.condition_1_6);
  REQUIRE(rep4.margin == Rational(7, 10));  // 6k+1
}

TEST_CASE("conditions (1.6) and (1.7) agree as linear forms in k", "[weights]") {
  for (auto label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"}) {
    auto R = build_root_system(label);
    INFO(label);
    std::size_t m = R.orbits.size();
    for (std::size_t o = 0; o < m; ++o) {
      std::vector<Rational> unit(m, Rational(0));
      unit[o] = 1;
      auto k = MultiplicityFunction::of(R, unit);
      // inner margin rho(k)(beta^vee) + k_beta vs sum_i k_i h_i, both linear in k
      QVec rho = rho_weight(R, k);
      Rational lhs = R.pair_root(rho, R.highest_short) + k.k_root(R.highest_short);
      Rational rhs = R.orbit_h[o];
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("Macdonald volume closed form", "[weights]") {
  auto A1 = build_root_system("A1");
  // k = -1/4: Gamma(1/2)/Gamma(3/4)^2 * pi / sin(pi/4)
  double expect = std::tgamma(0.5) / std::pow(std::tgamma(0.75), 2) * M_PI /
                  std::sin(M_PI / 4.0);
  REQUIRE(macdonald_volume(A1, Rational(-1, 4)) == Catch::Approx(expect).epsilon(1e-12));

  // k -> 0^-: diverges monotonically
  double v1 = macdonald_volume(A1, Rational(-1, 100));
  double v2 = macdonald_volume(A1, Rational(-1, 1000));
  double v3 = macdonald_volume(A1, Rational(-1, 10000));
  REQUIRE(v2 > v1);
  REQUIRE(v3 > v2);

  // singular parameter: 2k+1 hits the Gamma pole at 0
  REQUIRE_THROWS_AS(macdonald_volume(A1, Rational(-1, 2)), SingularParameter);

  // unequal parameters rejected
  auto B2 = build_root_system("B2");
  auto kk = MultiplicityFunction::of(B2, {Rational(-1, 4), Rational(-1, 5)});
  REQUIRE_THROWS_AS(macdonald_volume(B2, kk), std::invalid_argument);
}

TEST_CASE("identity binom(2k,k) pi/sin(-pi k) = 2 Gamma(2k)Gamma(-k)/Gamma(k)",
          "[weights]") {
  // Reflection-formula identity backing the rank-1 volume cross-checks.
  for (double k : {-0.1, -0.2, -0.25, -0.3, -0.45, -0.37}) {
    double lhs = binom_gamma(2 * k, k) * M_PI / std::sin(-M_PI * k);
    double rhs = 2.0 * real_gamma(2 * k) * real_gamma(-k) / real_gamma(k);
    REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("Calogero-Moser potential and the sqrt(delta) gauge identity", "[weights]") {
  auto A1 = build_root_system("A1");
  auto kz = MultiplicityFunction::equal(A1, Rational(0));
  auto k1 = MultiplicityFunction::equal(A1, Rational(1));
  auto x = A1.chamber_point({1.3});
  REQUIRE(schrodinger_potential(A1, kz, x) == 0.0);
  REQUIRE(schrodinger_potential(A1, k1, x) == 0.0);
  REQUIRE_THROWS_AS(schrodinger_potential(A1, kz, std::vector<double>(A1.ambient, 0.0)),
                    WallSingularity);

  // gauge identity: sqrt(delta) (L(k)+(rho,rho)) (psi/sqrt(delta)) = S(k) psi
  for (auto label : {"A1", "A2"}) {
    auto R = build_root_system(label);
    INFO(label);
    auto k = MultiplicityFunction::equal(R, Rational(-1, 4));
    oracles::FDContext fd(R);
    // smooth W-generic test function
    auto psi = [&](const std::vector<double>& y) {
      double s = 0, q = 0;
      for (std::size_t j = 0; j < y.size(); ++j) {
        s += (1.0 + 0.1 * j) * y[j];
        q += y[j] * y[j];
      }
      return std::exp(-0.3 * q + 0.2 * s);
    };
    auto psi_over_sqrt = [&](const std::vector<double>& y) {
      return psi(y) / std::sqrt(delta_density(R, k, y));
    };
    QVec rho = rho_ambient(R, k);
    double rho2 = to_double(dot(rho, rho)) * R.scale_d * R.scale_d;

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.8, 1.6);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> t(R.rank);
      for (auto& v : t) v = u(rng);
      auto x0 = R.chamber_point(t);
      double h = 2e-3;
      double lhs = std::sqrt(delta_density(R, k, x0)) *
                   (fd.apply_L(k, psi_over_sqrt, x0, h) + rho2 * psi_over_sqrt(x0));
      double rhs_lap = 0;
      for (auto& u2 : fd.onb) rhs_lap += fd.dir2(psi, x0, u2, h);
      // S(k) = Laplacian + potential term (the term carries its sign)
      double rhs = rhs_lap + schrodinger_potential(R, k, x0) * psi(x0);
      REQUIRE(lhs == Catch::Approx(rhs).margin(1e-6 * (1.0 + std::abs(rhs))));
    }
  }
}
