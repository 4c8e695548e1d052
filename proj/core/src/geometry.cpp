#include "omltopo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace omltopo::geom {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kPi = std::numbers::pi;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n < kZeroTol) raise(ErrorKind::DomainError, "cannot normalize a near-zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Line3::Line3(const Vec3& direction) : d_(normalized(direction)) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(d_[i]) > kZeroTol) {
      if (d_[i] < 0) d_ = -1.0 * d_;
      break;
    }
  }
}

Subspace3 Subspace3::full() {
  Subspace3 s;
  s.basis_ = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  return s;
}

Subspace3 Subspace3::span(const std::vector<Vec3>& vectors) {
  Subspace3 s;
  for (const Vec3& v : vectors) {
    Vec3 r = v;
    for (const Vec3& b : s.basis_) r = r - dot(b, r) * b;
    if (norm(r) > 1e-10) s.basis_.push_back(normalized(r));
    if (s.basis_.size() == 3) break;
  }
  return s;
}

Vec3 Subspace3::project(const Vec3& v) const {
  Vec3 p{0, 0, 0};
  for (const Vec3& b : basis_) p = p + dot(b, v) * b;
  return p;
}

bool Subspace3::contains(const Line3& line, double tol) const {
  const Vec3 u = line.direction();
  return norm(project(u) - u) <= tol;
}

double min_projected_dot(double cos_theta) {
  if (cos_theta < -kZeroTol || cos_theta > 1 + kZeroTol)
    raise(ErrorKind::DomainError, "cosine argument outside [0, 1]");
  return (3 * cos_theta - 1) / (cos_theta + 1);
}

double min_projected_dot_inv(double y) {
  if (y < -1 - kZeroTol || y > 1 + kZeroTol)
    raise(ErrorKind::DomainError, "argument outside [-1, 1]");
  return (1 + y) / (3 - y);
}

Rational ladder_cos(int n) {
  if (n < 0) raise(ErrorKind::DomainError, "ladder index must be nonnegative");
  return Rational(n, n + 2);
}

Angle ladder_angle(int n) { return Angle{std::acos(ladder_cos(n).to_double())}; }

ThetaLadder::ThetaLadder(int max_n) {
  if (max_n < 0) raise(ErrorKind::DomainError, "ladder bound must be nonnegative");
  cosines_.reserve(max_n + 1);
  cosines_.push_back(Rational(0));
  for (int n = 0; n < max_n; ++n) {
    const Rational& c = cosines_.back();
    cosines_.push_back((Rational(1) + c) / (Rational(3) - c));
  }
  angles_.reserve(max_n + 1);
  for (const Rational& c : cosines_) angles_.push_back(Angle{std::acos(c.to_double())});
}

Angle line_distance(const Line3& a, const Line3& b) {
  return Angle{std::acos(clamp01(std::abs(dot(a.direction(), b.direction()))))};
}

UnitVec3 projected_direction(Angle theta, double phi) {
  const double t = theta.radians;
  if (t <= 0 || t > kPi / 2 + kZeroTol)
    raise(ErrorKind::DomainError, "angle must lie in (0, pi/2]");
  const double c = std::cos(t), s = std::sin(t);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double norm2 = c * c + s * s * cp * cp;
  if (norm2 < kZeroTol * kZeroTol)
    raise(ErrorKind::DegenerateInput, "projection vanishes for this (theta, phi)");
  return UnitVec3(Vec3{c, s * cp * cp, s * cp * sp});
}

double projected_dot(Angle theta, double phi, double psi) {
  const double t = theta.radians;
  if (t <= 0 || t > kPi / 2 + kZeroTol)
    raise(ErrorKind::DomainError, "angle must lie in (0, pi/2]");
  const double c2 = std::cos(t) * std::cos(t);
  const double s2 = 1 - c2;
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double cq = std::cos(psi), sq = std::sin(psi);
  const double num = c2 + s2 * (cp * cp * cq * cq + cp * cq * sp * sq);
  const double den = std::sqrt((c2 + s2 * cp * cp) * (c2 + s2 * cq * cq));
  if (den < kZeroTol)
    raise(ErrorKind::DegenerateInput, "projection vanishes for this (theta, phi, psi)");
  return num / den;
}

namespace {

// Golden-section minimum of a unimodal function on [lo, hi].
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 120 && b - a > 1e-13; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace

DotRange projected_dot_range(Angle theta, int grid, double tol) {
  const double t = theta.radians;
  if (t <= 0 || t >= kPi / 2)
    raise(ErrorKind::DomainError, "extremal sweep needs an angle in (0, pi/2)");
  if (grid < 8) raise(ErrorKind::DomainError, "grid resolution too small");

  DotRange range;
  range.closed_min = min_projected_dot(std::cos(t));
  range.closed_max = 1.0;

  range.grid_min = 2.0;
  range.grid_max = -2.0;
  for (int i = 0; i < grid; ++i) {
    const double phi = 2 * kPi * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double psi = 2 * kPi * j / (grid - 1);
      const double value = projected_dot(theta, phi, psi);
      range.grid_min = std::min(range.grid_min, value);
      range.grid_max = std::max(range.grid_max, value);
    }
  }

  // The minimum sits on the ψ = −φ family; refine along it.
  auto diagonal = [&](double phi) { return projected_dot(theta, phi, -phi); };
  const auto [phi_min, refined] = golden_min(diagonal, 0.0, kPi / 2 - 1e-9);
  range.refined_min = refined;
  range.minimizer_phi = phi_min;

  if (std::abs(range.refined_min - range.closed_min) > tol)
    raise(ErrorKind::CertificateFailure,
          "refined minimum deviates from the closed form by " +
              std::to_string(std::abs(range.refined_min - range.closed_min)));
  if (range.grid_min < range.closed_min - 1e-12)
    raise(ErrorKind::CertificateFailure, "grid sweep found a value below the closed-form minimum");
  if (std::abs(range.grid_min - range.closed_min) > 1e-3)
    raise(ErrorKind::CertificateFailure, "grid sweep failed to approach the closed-form minimum");
  if (std::abs(range.grid_max - range.closed_max) > 1e-12)
    raise(ErrorKind::CertificateFailure, "grid maximum deviates from 1");
  return range;
}

std::optional<Line3> sasaki_project(const Subspace3& subspace, const Line3& line) {
  const Vec3 p = subspace.project(line.direction());
  if (norm(p) < kZeroTol) return std::nullopt;
  return Line3(p);
}

namespace {

struct Frame {
  Vec3 e1, e2, e3;
  double cos_gap = 0.0;
};

// Adapted orthonormal frame: e1 spans a, b's direction lies in span{e1, e2}
// with a nonnegative e1 coordinate.
Frame adapted_frame(const Line3& a, const Line3& b) {
  const Vec3 u = a.direction();
  Vec3 v = b.direction();
  if (dot(u, v) < 0) v = -1.0 * v;
  const double c = clamp01(dot(u, v));

  Frame frame;
  frame.e1 = u;
  frame.cos_gap = c;
  const Vec3 residual = v - c * u;
  if (norm(residual) < kZeroTol)
    raise(ErrorKind::DegenerateInput, "the two lines coincide; no adapted frame exists");
  frame.e2 = normalized(residual);
  frame.e3 = cross(frame.e1, frame.e2);
  return frame;
}

}  // namespace

WitnessPlanes witness_step(const Line3& a, const Line3& b, int n) {
  if (n < 1) raise(ErrorKind::DomainError, "witness step needs n >= 1");
  const double gap = line_distance(a, b).radians;
  const double required = ladder_angle(n).radians;
  if (gap < required - 1e-12)
    raise(ErrorKind::PreconditionError,
          "line distance " + std::to_string(gap) + " is below the ladder angle " +
              std::to_string(required));

  const Frame frame = adapted_frame(a, b);
  const double theta = std::acos(frame.cos_gap);
  const double target = ladder_cos(n - 1).to_double();

  // The diagonal dot value g(φ) = dot(θ, φ, −φ) falls monotonically from 1 at
  // φ = 0 to (3cosθ−1)/(cosθ+1) ≤ target at cos²φ = cosθ/(1+cosθ); bisect.
  const double x_star = std::max(frame.cos_gap / (1 + frame.cos_gap), 1e-12);
  double lo = 0.0;
  double hi = std::acos(std::sqrt(x_star));
  const Angle theta_angle{theta};
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = (lo + hi) / 2;
    if (projected_dot(theta_angle, mid, -mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  const double phi = (lo + hi) / 2;

  const auto plane = [&](double angle) {
    const Vec3 w = std::cos(angle) * frame.e2 + std::sin(angle) * frame.e3;
    return Subspace3::span({frame.e1, w});
  };
  return WitnessPlanes{plane(phi), plane(-phi)};
}

std::vector<ChainLink> chain_witness(const Line3& a, const Line3& b, int n) {
  if (n < 0) raise(ErrorKind::DomainError, "chain depth must be nonnegative");
  const double gap = line_distance(a, b).radians;
  if (gap < ladder_angle(n).radians - 1e-12)
    raise(ErrorKind::PreconditionError,
          "line distance " + std::to_string(gap) + " is below the ladder angle for n = " +
              std::to_string(n));

  std::vector<ChainLink> chain{ChainLink{a, b}};
  for (int k = n; k >= 1; --k) {
    const ChainLink& current = chain.back();
    const WitnessPlanes planes = witness_step(current.a, current.b, k);
    const auto next_a = sasaki_project(planes.first, current.b);
    const auto next_b = sasaki_project(planes.second, current.b);
    if (!next_a || !next_b)
      raise(ErrorKind::DegenerateInput, "witness projection vanished inside the chain");
    chain.push_back(ChainLink{*next_a, *next_b});
  }
  return chain;
}

Angle line_subspace_distance(const Line3& x, const Subspace3& b) {
  if (b.dim() == 0)
    raise(ErrorKind::DimensionError, "distance to the zero subspace is undefined");
  return Angle{std::acos(clamp01(norm(b.project(x.direction()))))};
}

Angle subspace_distance(const Subspace3& a, const Subspace3& b) {
  if (a.dim() == 0 || b.dim() == 0)
    raise(ErrorKind::DimensionError, "subspace distance needs dimensions >= 1");
  if (a.dim() != b.dim()) return Angle{kPi / 2};

  const int p = a.dim();
  Eigen::MatrixXd m(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = dot(a.basis()[i], b.basis()[j]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const double sigma_min = svd.singularValues()(p - 1);
  return Angle{std::acos(clamp01(sigma_min))};
}

Line3 random_line(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    if (norm(v) > 1e-6) return Line3(v);
  }
}

std::pair<Line3, Line3> random_line_pair(std::mt19937_64& rng, Angle separation) {
  const double delta = separation.radians;
  if (delta < 0 || delta > kPi / 2 + kZeroTol)
    raise(ErrorKind::DomainError, "separation must lie in [0, pi/2]");

  const Line3 first = random_line(rng);
  const Vec3 u = first.direction();
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 w{0, 0, 0};
  for (;;) {
    const Vec3 r{gauss(rng), gauss(rng), gauss(rng)};
    const Vec3 perp = r - dot(u, r) * u;
    if (norm(perp) > 1e-6) {
      w = normalized(perp);
      break;
    }
  }
  const Vec3 v = std::cos(delta) * u + std::sin(delta) * w;
  return {first, Line3(v)};
}

}  // namespace omltopo::geom
