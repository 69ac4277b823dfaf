#include "flute/hplane/geom.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace flute::hplane {

Mat3 form_matrix() {
  Mat3 j = Mat3::Zero();
  j(0, 0) = 1.0;
  j(1, 1) = -1.0;
  j(2, 2) = -1.0;
  return j;
}

bool on_hyperboloid(const Vec3& p, double tol) {
  return p[0] > 0.0 && std::abs(minkowski(p, p) - 1.0) <= tol;
}

Vec3 normalize_point(const Vec3& p) {
  const double q = minkowski(p, p);
  if (!(q > 0.0) || !(p[0] > 0.0))
    throw std::domain_error("normalize_point: not a future timelike vector");
  return p / std::sqrt(q);
}

Vec3 normalize_spacelike(const Vec3& v) {
  const double q = minkowski(v, v);
  if (!(q < 0.0)) throw std::domain_error("normalize_spacelike: not spacelike");
  return v / std::sqrt(-q);
}

Length dist(const Vec3& p, const Vec3& q) {
  const double t = minkowski(p, q);
  if (t >= 1.0) return std::acosh(t);
  if (t > 1.0 - 1e-9) return 0.0;
  throw std::domain_error("dist: pairing below 1, inputs are not valid points");
}

double form_residual(const Mat3& m) {
  const Mat3 j = form_matrix();
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

Isometry::Isometry() : m(Mat3::Identity()) {}

Isometry::Isometry(const Mat3& mm) : m(mm) {
  assert(form_residual(m) <= 1e-9);
  assert(m(0, 0) > 0.0);
}

Isometry Isometry::operator*(const Isometry& o) const {
  Isometry r;
  r.m = m * o.m;
  assert(form_residual(r.m) <= 1e-9);
  return r;
}

Isometry translation_x(double t) {
  Isometry r;
  r.m << std::cosh(t), std::sinh(t), 0.0,
         std::sinh(t), std::cosh(t), 0.0,
         0.0, 0.0, 1.0;
  return r;
}

Isometry rotation(double theta) {
  Isometry r;
  r.m << 1.0, 0.0, 0.0,
         0.0, std::cos(theta), -std::sin(theta),
         0.0, std::sin(theta), std::cos(theta);
  return r;
}

Isometry parabolic_std(double s) {
  const double q = s * s / 2.0;
  Isometry r;
  r.m << 1.0 + q, -q, s,
         q, 1.0 - q, s,
         s, -s, 1.0;
  return r;
}

Isometry frame_at(const Vec3& p, const Vec3& v) {
  const Vec3 cross = p.cross(v);
  const Vec3 w = -(form_matrix() * cross);
  Mat3 m;
  m.col(0) = p;
  m.col(1) = v;
  m.col(2) = w;
  return Isometry(m);
}

Vec3 unit_tangent(const Vec3& p, const Vec3& q) {
  const Vec3 w = q - minkowski(q, p) * p;
  return normalize_spacelike(w);
}

Vec3 geodesic_point(const Vec3& p, const Vec3& v, double t) {
  return std::cosh(t) * p + std::sinh(t) * v;
}

Vec3 forward_ideal(const Vec3& p, const Vec3& v) { return p + v; }

Vec3 geodesic_normal(const Vec3& u1, const Vec3& u2) {
  const Vec3 n = form_matrix() * u1.cross(u2);
  return normalize_spacelike(n);
}

Vec3 orient_normal(const Vec3& n, const Vec3& ref) {
  return minkowski(ref, n) >= 0.0 ? n : Vec3(-n);
}

double ray_time_to_level(const Vec3& p, const Vec3& v, const Vec3& omega, double u) {
  const double a = minkowski(p, omega);
  const double b = minkowski(v, omega);
  // level along the ray: ((a+b) e^t + (a-b) e^-t) / 2 = u, solved for the
  // root that stays finite as a+b -> 0 (ray descending into the cusp).
  const double disc = u * u - (a + b) * (a - b);
  if (!(disc >= 0.0) || !(a - b > 0.0))
    throw std::domain_error("ray_time_to_level: ray does not reach the level");
  const double x = (a - b) / (u + std::sqrt(disc));
  if (!(x > 0.0)) throw std::domain_error("ray_time_to_level: no positive solution");
  return std::log(x);
}

double chord_to_horocyclic_arc(double chord) { return 2.0 * std::sinh(chord / 2.0); }

double min_level_on_chord(const Vec3& p, const Vec3& q, const Vec3& omega) {
  const double a = busemann_level(p, omega);
  const double b = busemann_level(q, omega);
  const double d = dist(p, q);
  if (d <= 0.0) return std::min(a, b);
  // f(t) = (a sinh(d-t) + b sinh t)/sinh d on [0,d]; interior minimum only
  // when both endpoint derivatives point inward.
  const double shd = std::sinh(d), chd = std::cosh(d);
  if (b < a * chd && a < b * chd) {
    const double th = (a * chd - b) / (a * shd);
    if (th > -1.0 && th < 1.0) {
      const double t = std::atanh(th);
      if (t > 0.0 && t < d)
        return (a * std::sinh(d - t) + b * std::sinh(t)) / shd;
    }
  }
  return std::min(a, b);
}

} // namespace flute::hplane
