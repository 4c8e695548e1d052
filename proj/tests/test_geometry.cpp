#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "omltopo/geometry.hpp"

using namespace omltopo;
using namespace omltopo::geom;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Test-side projection: explicit vectors, orthonormal pair {u, w_phi}.
Vec3 oracle_projected(double theta, double phi) {
  const Vec3 u{1, 0, 0};
  const Vec3 v{std::cos(theta), std::sin(theta), 0};
  const Vec3 w{0, std::cos(phi), std::sin(phi)};
  const Vec3 p = dot(u, v) * u + dot(w, v) * w;
  return normalized(p);
}

}  // namespace

TEST_CASE("transfer map fixed points and range") {
  CHECK(min_projected_dot(0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(min_projected_dot(1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(min_projected_dot(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(min_projected_dot(1.5), Error);
  CHECK_THROWS_AS(min_projected_dot_inv(-2.0), Error);

  double previous = -1.0;
  for (int i = 1; i <= 40; ++i) {
    const double x = i / 40.0;
    const double y = min_projected_dot(x);
    CHECK(y > previous);  // strictly increasing
    if (x < 1.0) CHECK(y < x);
    CHECK(min_projected_dot(min_projected_dot_inv(y)) == doctest::Approx(y).epsilon(1e-13));
    previous = y;
  }
}

TEST_CASE("angle ladder: exact rationals, monotone angles") {
  CHECK(ladder_cos(0) == Rational(0));
  CHECK(ladder_cos(2) == Rational(1, 2));
  CHECK(ladder_angle(0).radians == doctest::Approx(kHalfPi).epsilon(1e-15));

  const ThetaLadder ladder(1000);
  for (int n = 0; n <= 1000; ++n) CHECK(ladder.cosine(n) == ladder_cos(n));
  for (int n = 1; n <= 1000; ++n) CHECK(ladder.angle(n).radians < ladder.angle(n - 1).radians);
  // theta_n ~ 2/sqrt(n+2)
  CHECK(ladder.angle(1000).radians ==
        doctest::Approx(2.0 / std::sqrt(1002.0)).epsilon(1e-3));

  // double-precision version of the recursion agrees
  for (int n = 0; n < 50; ++n)
    CHECK(min_projected_dot(ladder.cosine(n + 1).to_double()) ==
          doctest::Approx(ladder.cosine(n).to_double()).epsilon(1e-14));
}

TEST_CASE("projective metric") {
  const Line3 x(Vec3{1, 0, 0});
  CHECK(line_distance(x, x).radians == 0.0);
  CHECK(line_distance(x, Line3(Vec3{0, 1, 0})).radians == doctest::Approx(kHalfPi));
  // antipodal representatives name the same line
  CHECK(line_distance(x, Line3(Vec3{-1, 0, 0})).radians == 0.0);

  for (double theta : {0.3, 0.7, 1.2}) {
    const Line3 v(Vec3{std::cos(theta), std::sin(theta), 0});
    CHECK(line_distance(x, v).radians == doctest::Approx(theta).epsilon(1e-12));
  }
}

TEST_CASE("projected direction: endpoints and the generic-projection oracle") {
  const Angle theta{0.9};
  const UnitVec3 at_zero = projected_direction(theta, 0.0);
  CHECK(at_zero[0] == doctest::Approx(std::cos(0.9)).epsilon(1e-14));
  CHECK(at_zero[1] == doctest::Approx(std::sin(0.9)).epsilon(1e-14));
  CHECK(at_zero[2] == doctest::Approx(0.0));

  const UnitVec3 at_quarter = projected_direction(theta, kHalfPi);
  CHECK(at_quarter[0] == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> theta_dist(0.01, kHalfPi - 0.01);
  std::uniform_real_distribution<double> phi_dist(0.0, 2 * std::numbers::pi);
  for (int i = 0; i < 10000; ++i) {
    const double t = theta_dist(rng);
    const double phi = phi_dist(rng);
    const UnitVec3 computed = projected_direction(Angle{t}, phi);
    const Vec3 expected = oracle_projected(t, phi);
    CHECK(std::abs(dot(computed.components(), expected)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed-form dot product against explicit vectors") {
  const Angle theta{1.1};
  CHECK(projected_dot(theta, 0.4, 0.4) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(projected_dot(theta, 0.0, kHalfPi) == doctest::Approx(std::cos(1.1)).epsilon(1e-14));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta_dist(0.01, kHalfPi - 0.01);
  std::uniform_real_distribution<double> phi_dist(0.0, 2 * std::numbers::pi);
  for (int i = 0; i < 10000; ++i) {
    const double t = theta_dist(rng);
    const double phi = phi_dist(rng), psi = phi_dist(rng);
    const double closed = projected_dot(Angle{t}, phi, psi);
    const double explicit_dot = dot(oracle_projected(t, phi), oracle_projected(t, psi));
    CHECK(closed == doctest::Approx(explicit_dot).epsilon(1e-12));
  }
}

TEST_CASE("extremal range certificate") {
  const DotRange range = projected_dot_range(Angle{std::numbers::pi / 3}, 200);
  CHECK(range.closed_min == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(range.refined_min == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(range.grid_max == doctest::Approx(1.0).epsilon(1e-13));
  // minimizer location: cos²φ = cosθ/(1+cosθ) = 1/3
  const double c2 = std::cos(range.minimizer_phi) * std::cos(range.minimizer_phi);
  CHECK(c2 == doctest::Approx(1.0 / 3.0).epsilon(1e-5));

  CHECK_THROWS_AS(projected_dot_range(Angle{0.0}), Error);
  CHECK_THROWS_AS(projected_dot_range(Angle{kHalfPi}), Error);
}

TEST_CASE("line projection onto subspaces") {
  const Subspace3 plane = Subspace3::span({Vec3{1, 0, 0}, Vec3{0, 1, 0}});
  const Line3 inside(Vec3{1, 1, 0});
  const Line3 orthogonal(Vec3{0, 0, 1});

  const auto kept = sasaki_project(plane, inside);
  REQUIRE(kept.has_value());
  CHECK(line_distance(*kept, inside).radians == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(sasaki_project(plane, orthogonal).has_value());

  // span{v} projected onto the tilted plane is the closed-form direction
  const double theta = 0.8, phi = 0.5;
  const Line3 v(Vec3{std::cos(theta), std::sin(theta), 0});
  const Subspace3 tilted = Subspace3::span({Vec3{1, 0, 0}, Vec3{0, std::cos(phi), std::sin(phi)}});
  const auto projected = sasaki_project(tilted, v);
  REQUIRE(projected.has_value());
  const UnitVec3 closed = projected_direction(Angle{theta}, phi);
  CHECK(std::abs(dot(projected->direction(), closed.components())) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("witness planes achieve the ladder angle one level down") {
  std::mt19937_64 rng(23);

  SUBCASE("distance exactly theta_1, one step to orthogonality") {
    const auto [a, b] = random_line_pair(rng, ladder_angle(1));
    const WitnessPlanes planes = witness_step(a, b, 1);
    CHECK(planes.first.contains(a));
    CHECK(planes.second.contains(a));
    const auto pa = sasaki_project(planes.first, b);
    const auto pb = sasaki_project(planes.second, b);
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    CHECK(line_distance(*pa, *pb).radians == doctest::Approx(kHalfPi).epsilon(1e-9));
  }

  SUBCASE("distance pi/2 stays valid for n = 1") {
    const auto [a, b] = random_line_pair(rng, Angle{kHalfPi});
    const WitnessPlanes planes = witness_step(a, b, 1);
    const auto pa = sasaki_project(planes.first, b);
    const auto pb = sasaki_project(planes.second, b);
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    CHECK(line_distance(*pa, *pb).radians == doctest::Approx(kHalfPi).epsilon(1e-9));
  }

  SUBCASE("planes always contain the first line") {
    std::uniform_real_distribution<double> extra(0.0, 0.2);
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(i % 5);
      const double separation =
          std::min(kHalfPi, ladder_angle(n).radians + extra(rng));
      const auto [a, b] = random_line_pair(rng, Angle{separation});
      const WitnessPlanes planes = witness_step(a, b, n);
      CHECK(planes.first.contains(a));
      CHECK(planes.second.contains(a));
      const double achieved =
          line_distance(*sasaki_project(planes.first, b), *sasaki_project(planes.second, b))
              .radians;
      CHECK(achieved == doctest::Approx(ladder_angle(n - 1).radians).epsilon(1e-9));
    }
  }

  SUBCASE("precondition and degeneracy") {
    const auto [a, b] = random_line_pair(rng, Angle{ladder_angle(2).radians - 0.05});
    CHECK_THROWS_AS(witness_step(a, b, 2), Error);
    const Line3 same(Vec3{1, 2, 3});
    CHECK_THROWS_AS(witness_step(same, same, 1), Error);
  }
}

TEST_CASE("witness chains reach orthogonal pairs") {
  std::mt19937_64 rng(31);

  SUBCASE("n = 0 with an orthogonal pair") {
    const auto [a, b] = random_line_pair(rng, Angle{kHalfPi});
    const auto chain = chain_witness(a, b, 0);
    CHECK(chain.size() == 1);
    CHECK(line_distance(chain[0].a, chain[0].b).radians == doctest::Approx(kHalfPi).epsilon(1e-12));
  }

  SUBCASE("n = 2 at exactly theta_2") {
    const auto [a, b] = random_line_pair(rng, ladder_angle(2));
    const auto chain = chain_witness(a, b, 2);
    CHECK(chain.size() == 3);
    CHECK(line_distance(chain.back().a, chain.back().b).radians ==
          doctest::Approx(kHalfPi).epsilon(1e-7));
  }

  SUBCASE("slack above the ladder angle is fine") {
    const auto [a, b] = random_line_pair(rng, Angle{ladder_angle(1).radians + 0.1});
    const auto chain = chain_witness(a, b, 1);
    CHECK(line_distance(chain.back().a, chain.back().b).radians ==
          doctest::Approx(kHalfPi).epsilon(1e-7));
  }
}

TEST_CASE("line-to-subspace and subspace distances") {
  const Subspace3 plane = Subspace3::span({Vec3{1, 0, 0}, Vec3{0, 1, 0}});
  CHECK(line_subspace_distance(Line3(Vec3{1, 1, 0}), plane).radians == doctest::Approx(0.0));
  CHECK(line_subspace_distance(Line3(Vec3{0, 0, 1}), plane).radians == doctest::Approx(kHalfPi));
  CHECK_THROWS_AS(line_subspace_distance(Line3(Vec3{1, 0, 0}), Subspace3::zero()), Error);

  const Subspace3 e1 = Subspace3::span({Vec3{1, 0, 0}});
  for (double theta : {0.2, 0.9, 1.4}) {
    const Subspace3 tilted = Subspace3::span({Vec3{std::cos(theta), std::sin(theta), 0}});
    CHECK(subspace_distance(e1, tilted).radians == doctest::Approx(theta).epsilon(1e-12));
    CHECK(subspace_distance(tilted, e1).radians == doctest::Approx(theta).epsilon(1e-12));
  }
  CHECK(subspace_distance(e1, e1).radians == doctest::Approx(0.0));
  CHECK(subspace_distance(e1, plane).radians == doctest::Approx(kHalfPi));
  CHECK_THROWS_AS(subspace_distance(Subspace3::zero(), e1), Error);

  // rotating a plane around the x-axis: the largest principal angle is the tilt
  const double tilt = 0.6;
  const Subspace3 rotated =
      Subspace3::span({Vec3{1, 0, 0}, Vec3{0, std::cos(tilt), std::sin(tilt)}});
  CHECK(subspace_distance(plane, rotated).radians == doctest::Approx(tilt).epsilon(1e-12));
}
