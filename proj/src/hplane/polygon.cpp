#include "flute/hplane/polygon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flute::hplane {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kClosureTol = 1e-8;

Vec3 origin() { return Vec3(1.0, 0.0, 0.0); }

// Corners of the closed polygon traversed ccw with left right-angle turns.
// Returns n+1 corners (last should reproduce the first) plus the final frame.
std::vector<Vec3> walk_corners(const std::vector<double>& len, Isometry* final_frame) {
  std::vector<Vec3> corners;
  corners.push_back(origin());
  Isometry f;
  for (double s : len) {
    Isometry g = f * translation_x(s);
    corners.push_back(normalize_point(g(origin())));
    f = g * rotation(kHalfPi);
  }
  if (final_frame) *final_frame = f;
  return corners;
}

void finish_region(ConvexRegion& r, double horo_bulge) {
  Vec3 acc = Vec3::Zero();
  for (const auto& s : r.sides) acc += s.a;
  r.center = normalize_point(acc);
  double rad = 0.0;
  for (const auto& s : r.sides) rad = std::max(rad, dist(r.center, s.a));
  r.max_radius = rad + horo_bulge;
  for (auto& s : r.sides) {
    if (s.horocyclic) continue;
    s.normal = orient_normal(s.normal, r.center);
    s.tangent = unit_tangent(s.a, s.b);
  }
}

ConvexRegion region_from_walk(const std::vector<double>& len) {
  Isometry f;
  const auto corners = walk_corners(len, &f);
  const int n = static_cast<int>(len.size());
  if ((f.m - Mat3::Identity()).cwiseAbs().maxCoeff() > kClosureTol ||
      dist(corners[n], corners[0]) > 1e-9)
    throw std::runtime_error("polygon walk failed to close: inconsistent side lengths");
  ConvexRegion r;
  for (int i = 0; i < n; ++i) {
    RegionSide s;
    s.a = corners[i];
    s.b = corners[(i + 1) % n];
    s.length = len[i];
    s.normal = geodesic_normal(s.a, s.b);
    r.sides.push_back(s);
  }
  finish_region(r, 0.0);
  for (int i = 0; i < n; ++i) {
    const double measured = dist(r.sides[i].a, r.sides[i].b);
    if (std::abs(measured - len[i]) > 1e-9)
      throw std::runtime_error("polygon walk side length mismatch");
  }
  return r;
}

} // namespace

bool ConvexRegion::contains(const Vec3& p, double margin) const {
  const double s_margin = std::sinh(margin);
  for (const auto& s : sides) {
    if (s.horocyclic) continue;
    if (side_value(p, s.normal) < s_margin) return false;
  }
  const double lvl_factor = std::exp(margin);
  for (const auto& c : clips)
    if (busemann_level(p, c.omega) < c.level * lvl_factor) return false;
  return true;
}

std::vector<Vec3> build_right_hexagon(Length a, Length b, Length c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw std::domain_error("build_right_hexagon: sides must be positive");
  using hyptrig::hexagon_opposite;
  const std::vector<double> len = {a, hexagon_opposite(a, b, c),
                                   b, hexagon_opposite(b, c, a),
                                   c, hexagon_opposite(c, a, b)};
  Isometry f;
  auto corners = walk_corners(len, &f);
  if ((f.m - Mat3::Identity()).cwiseAbs().maxCoeff() > kClosureTol ||
      dist(corners[6], corners[0]) > 1e-9)
    throw std::runtime_error("build_right_hexagon: construction failed to close");
  corners.pop_back();
  return corners;
}

ConvexRegion hexagon_region(Length a, Length b, Length c) {
  using hyptrig::hexagon_opposite;
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw std::domain_error("hexagon_region: sides must be positive");
  return region_from_walk({a, hexagon_opposite(a, b, c),
                           b, hexagon_opposite(b, c, a),
                           c, hexagon_opposite(c, a, b)});
}

ConvexRegion pentagon_region(Length b) {
  if (!(std::sinh(b) > 1.0))
    throw std::domain_error("pentagon_region: requires sinh b > 1");
  const auto c_opt = hyptrig::pentagon_opposite(b, b);
  if (!c_opt) throw std::domain_error("pentagon_region: degenerate pentagon");
  const double c = *c_opt;
  const double alpha = std::asinh(std::cosh(b) / std::sinh(c));
  return region_from_walk({b, alpha, c, alpha, b});
}

namespace {

// Clip level at which the horocyclic arc between two rays into the cusp has
// length exactly `arc_target`.  Arc length scales linearly with the level.
double level_for_arc(const Vec3& p1, const Vec3& v1, const Vec3& p2, const Vec3& v2,
                     const Vec3& omega, double arc_target) {
  const double u0 = 0.5 * std::min(busemann_level(p1, omega), busemann_level(p2, omega));
  const Vec3 q1 = geodesic_point(p1, v1, ray_time_to_level(p1, v1, omega, u0));
  const Vec3 q2 = geodesic_point(p2, v2, ray_time_to_level(p2, v2, omega, u0));
  const double arc0 = chord_to_horocyclic_arc(dist(q1, q2));
  return u0 * (arc_target / arc0);
}

// Horocyclic side from qa to qb around the cusp at omega.
RegionSide horocycle_side(const Vec3& qa, const Vec3& qb, const Vec3& omega) {
  RegionSide s;
  s.a = qa;
  s.b = qb;
  s.horocyclic = true;
  s.length = chord_to_horocyclic_arc(dist(qa, qb));
  const Vec3 toward_cusp = normalize_spacelike(omega - minkowski(omega, qa) * qa);
  s.flow = frame_at(qa, toward_cusp);
  // The standard parabolic orbit leaves e0 in the +e2 direction; pick the
  // sign that heads for qb.
  const double ds = 1e-3;
  const Vec3 plus = s.flow(parabolic_std(ds)(origin()));
  const Vec3 minus = s.flow(parabolic_std(-ds)(origin()));
  s.flow_sign = (minkowski(plus, qb) >= minkowski(minus, qb)) ? 1.0 : -1.0;
  if (dist(s.flow(parabolic_std(s.flow_sign * s.length)(origin())), qb) > 1e-8)
    throw std::runtime_error("horocycle_side: flow does not reach the far endpoint");
  return s;
}

void check_parallel_ideal(const Vec3& w1, const Vec3& w2, const char* what) {
  const Vec3 a = w1 / w1[0];
  const Vec3 b = w2 / w2[0];
  if ((a - b).cwiseAbs().maxCoeff() > 1e-8)
    throw std::runtime_error(std::string("cusped polygon failed to close: ") + what);
}

} // namespace

ConvexRegion one_cusp_region(Length l1, Length l2) {
  if (!(l1 > 0.0) || !(l2 > 0.0))
    throw std::domain_error("one_cusp_region: geodesic cuffs must be positive");
  const double z = hyptrig::collar_width(l1) + hyptrig::collar_width(l2);

  // Finite chain z, l2/2; the two remaining geodesic sides run into the cusp.
  Isometry f;
  Isometry g = f * translation_x(z);
  const Vec3 c1 = normalize_point(g(origin()));
  Isometry f1 = g * rotation(kHalfPi);
  g = f1 * translation_x(l2 / 2.0);
  const Vec3 c2 = normalize_point(g(origin()));
  Isometry f2 = g * rotation(kHalfPi);
  const Vec3 vx = f2.m.col(1);
  const Vec3 omega_a = c2 + vx;

  Isometry fprev = rotation(-kHalfPi) * translation_x(-l1 / 2.0);
  const Vec3 c5 = normalize_point(fprev(origin()));
  const Vec3 vy_walk = (fprev * rotation(-kHalfPi)).m.col(1);
  const Vec3 omega_b = c5 - vy_walk;
  check_parallel_ideal(omega_a, omega_b, "cusp rays diverge");

  const Vec3 omega = omega_a / omega_a[0];
  const Vec3 vy = -vy_walk;
  const double level = level_for_arc(c2, vx, c5, vy, omega, 1.0);
  const Vec3 qx = normalize_point(
      geodesic_point(c2, vx, ray_time_to_level(c2, vx, omega, level)));
  const Vec3 qy = normalize_point(
      geodesic_point(c5, vy, ray_time_to_level(c5, vy, omega, level)));

  ConvexRegion r;
  auto geodesic_side = [](const Vec3& a, const Vec3& b, const Vec3& n) {
    RegionSide s;
    s.a = a;
    s.b = b;
    s.length = dist(a, b);
    s.normal = n;
    return s;
  };
  r.sides.push_back(geodesic_side(origin(), c1, geodesic_normal(origin(), c1)));
  r.sides.push_back(geodesic_side(c1, c2, geodesic_normal(c1, c2)));
  r.sides.push_back(geodesic_side(c2, qx, geodesic_normal(c2, omega)));
  r.sides.push_back(horocycle_side(qx, qy, omega));
  r.sides.push_back(geodesic_side(qy, c5, geodesic_normal(c5, omega)));
  r.sides.push_back(geodesic_side(c5, origin(), geodesic_normal(c5, origin())));
  r.clips.push_back({omega, level});
  finish_region(r, 0.6);
  if (std::abs(r.sides[kHoro1].length - 1.0) > 1e-9)
    throw std::runtime_error("one_cusp_region: horocycle arc is not length 1");
  return r;
}

ConvexRegion two_cusp_region(Length l1) {
  if (!(l1 > 0.0))
    throw std::domain_error("two_cusp_region: geodesic cuff must be positive");

  Isometry g = translation_x(l1 / 2.0);
  const Vec3 c1 = normalize_point(g(origin()));
  const Vec3 vr = (g * rotation(kHalfPi)).m.col(1);
  const Vec3 omega_r_raw = c1 + vr;
  const Vec3 vl_walk = rotation(-kHalfPi).m.col(1);
  const Vec3 omega_l_raw = origin() - vl_walk;
  const Vec3 omega_r = omega_r_raw / omega_r_raw[0];
  const Vec3 omega_l = omega_l_raw / omega_l_raw[0];

  // Geodesic joining the two ideal points carries the z side.
  const double pairing = minkowski(omega_r, omega_l);
  const Vec3 pz = (omega_r + omega_l) / std::sqrt(2.0 * pairing);
  const Vec3 vz_r = (omega_r - omega_l) / std::sqrt(2.0 * pairing);

  const double level_r = level_for_arc(c1, vr, pz, vz_r, omega_r, 1.0);
  const Vec3 qr = normalize_point(
      geodesic_point(c1, vr, ray_time_to_level(c1, vr, omega_r, level_r)));
  const Vec3 zr = normalize_point(
      geodesic_point(pz, vz_r, ray_time_to_level(pz, vz_r, omega_r, level_r)));

  const Vec3 vl = -vl_walk;
  const double level_l = level_for_arc(origin(), vl, pz, Vec3(-vz_r), omega_l, 1.0);
  const Vec3 ql = normalize_point(
      geodesic_point(origin(), vl, ray_time_to_level(origin(), vl, omega_l, level_l)));
  const Vec3 zl = normalize_point(geodesic_point(
      pz, Vec3(-vz_r), ray_time_to_level(pz, Vec3(-vz_r), omega_l, level_l)));

  ConvexRegion r;
  auto geodesic_side = [](const Vec3& a, const Vec3& b, const Vec3& n) {
    RegionSide s;
    s.a = a;
    s.b = b;
    s.length = dist(a, b);
    s.normal = n;
    return s;
  };
  r.sides.push_back(geodesic_side(origin(), c1, geodesic_normal(origin(), c1)));
  r.sides.push_back(geodesic_side(c1, qr, geodesic_normal(c1, omega_r)));
  r.sides.push_back(horocycle_side(qr, zr, omega_r));
  r.sides.push_back(geodesic_side(zr, zl, geodesic_normal(omega_r, omega_l)));
  r.sides.push_back(horocycle_side(zl, ql, omega_l));
  r.sides.push_back(geodesic_side(ql, origin(), geodesic_normal(origin(), omega_l)));
  r.clips.push_back({omega_r, level_r});
  r.clips.push_back({omega_l, level_l});
  finish_region(r, 0.6);

  const double x_expected = hyptrig::collar_width(l1);
  if (std::abs(r.sides[kXRight].length - x_expected) > 1e-8 ||
      std::abs(r.sides[kXLeft].length - x_expected) > 1e-8)
    throw std::runtime_error("two_cusp_region: truncated side length mismatch");
  return r;
}

ConvexRegion region_from_corners(const std::vector<Vec3>& corners) {
  const int n = static_cast<int>(corners.size());
  if (n < 3) throw std::domain_error("region_from_corners: need at least 3 corners");
  ConvexRegion r;
  for (int i = 0; i < n; ++i) {
    RegionSide s;
    s.a = normalize_point(corners[i]);
    s.b = normalize_point(corners[(i + 1) % n]);
    s.length = dist(s.a, s.b);
    if (s.length <= 0.0)
      throw std::domain_error("region_from_corners: repeated corner");
    s.normal = geodesic_normal(s.a, s.b);
    r.sides.push_back(s);
  }
  finish_region(r, 0.0);
  for (const auto& s : r.sides)
    for (const auto& t : r.sides)
      if (side_value(t.a, s.normal) < -1e-9)
        throw std::domain_error("region_from_corners: corners are not convex");
  return r;
}

} // namespace flute::hplane
