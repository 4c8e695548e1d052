#pragma once

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "omltopo/errors.hpp"
#include "omltopo/rational.hpp"

namespace omltopo::geom {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);  // DomainError on a near-zero vector
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);

/// Angle in radians; metric functions return values in [0, π/2].
struct Angle {
  double radians = 0.0;
  friend auto operator<=>(const Angle&, const Angle&) = default;
};

/// Unit vector (‖v‖ = 1 within 1e-12); normalizes on construction.
class UnitVec3 {
 public:
  explicit UnitVec3(const Vec3& v) : v_(normalized(v)) {}
  const Vec3& components() const { return v_; }
  double operator[](int i) const { return v_[i]; }

 private:
  Vec3 v_;
};

/// Projective line through the origin: unit direction with the first
/// component over 1e-12 made positive, so equal lines compare equal.
class Line3 {
 public:
  explicit Line3(const Vec3& direction);
  const Vec3& direction() const { return d_; }
  friend bool operator==(const Line3&, const Line3&) = default;

 private:
  Vec3 d_;
};

/// Subspace of ℝ³ of dimension 0..3 carried by an orthonormal basis.
class Subspace3 {
 public:
  static Subspace3 zero() { return Subspace3(); }
  static Subspace3 full();
  /// Gram–Schmidt over the spanning vectors; near-dependent vectors dropped.
  static Subspace3 span(const std::vector<Vec3>& vectors);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec3>& basis() const { return basis_; }
  Vec3 project(const Vec3& v) const;
  bool contains(const Line3& line, double tol = 1e-9) const;

 private:
  Subspace3() = default;
  std::vector<Vec3> basis_;
};

/// Transfer map x ↦ (3x−1)/(x+1): the least reachable dot product of two
/// projected directions, as a function of the cosine of their gap.
double min_projected_dot(double cos_theta);        // x in [0, 1]
double min_projected_dot_inv(double y);            // y in [−1, 1]

/// n ↦ n/(n+2), exactly.
Rational ladder_cos(int n);
/// arccos of the above; starts at π/2 and decreases to 0.
Angle ladder_angle(int n);

/// Precomputed ladder: exact cosines via the recursion
/// c_{n+1} = (1 + c_n)/(3 − c_n) plus their angles.
class ThetaLadder {
 public:
  explicit ThetaLadder(int max_n);
  int max_n() const { return static_cast<int>(cosines_.size()) - 1; }
  const Rational& cosine(int n) const { return cosines_[n]; }
  Angle angle(int n) const { return angles_[n]; }

 private:
  std::vector<Rational> cosines_;
  std::vector<Angle> angles_;
};

/// arccos |u·v| — the projective-sphere metric.
Angle line_distance(const Line3& a, const Line3& b);

/// Normalized projection of v = (cosθ, sinθ, 0) onto span{(1,0,0), w_φ}
/// with w_φ = (0, cosφ, sinφ), in closed form. θ in (0, π/2].
UnitVec3 projected_direction(Angle theta, double phi);

/// Closed form of projected_direction(θ,φ) · projected_direction(θ,ψ).
double projected_dot(Angle theta, double phi, double psi);

struct DotRange {
  double closed_min = 0.0;  // (3cosθ−1)/(cosθ+1)
  double closed_max = 1.0;
  double grid_min = 0.0;
  double grid_max = 0.0;
  double refined_min = 0.0;   // golden-section refinement along ψ = −φ
  double minimizer_phi = 0.0;
};

/// Extremal values of the projected dot product over (φ, ψ) with a numeric
/// certificate: a grid sweep plus a refined minimum must reproduce the
/// closed form within `tol`, else CertificateFailure.
DotRange projected_dot_range(Angle theta, int grid = 400, double tol = 1e-6);

/// Line spanned by the orthogonal projection of `line` onto `subspace`;
/// nullopt when the projection vanishes (the zero subspace).
std::optional<Line3> sasaki_project(const Subspace3& subspace, const Line3& line);

struct WitnessPlanes {
  Subspace3 first, second;
};

/// Two planes through `a` whose Sasaki projections of `b` sit exactly
/// ladder_angle(n−1) apart. Requires line_distance(a,b) ≥ ladder_angle(n)
/// (PreconditionError) and a ≠ b (DegenerateInput).
WitnessPlanes witness_step(const Line3& a, const Line3& b, int n);

struct ChainLink {
  Line3 a, b;
};

/// Repeated witness steps from (a, b) with distance ≥ ladder_angle(n) down
/// to an orthogonal pair: links at ladder distances θ_n, θ_{n−1}, …, θ_0.
std::vector<ChainLink> chain_witness(const Line3& a, const Line3& b, int n);

/// d_π: angle between a line and its nearest line inside a subspace,
/// arccos ‖Π_b u‖. DimensionError on the zero subspace.
Angle line_subspace_distance(const Line3& x, const Subspace3& b);

/// d_L: symmetrized largest principal angle; π/2 when dimensions differ.
Angle subspace_distance(const Subspace3& a, const Subspace3& b);

Line3 random_line(std::mt19937_64& rng);
/// Pair of lines exactly `separation` apart (separation in [0, π/2]).
std::pair<Line3, Line3> random_line_pair(std::mt19937_64& rng, Angle separation);

}  // namespace omltopo::geom
