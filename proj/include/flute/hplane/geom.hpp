#pragma once

#include <Eigen/Core>

#include "flute/hyptrig.hpp"

namespace flute::hplane {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Bilinear form <p,q> = p0 q0 - p1 q1 - p2 q2.  Points of the hyperbolic
/// plane are the vectors with <p,p> = 1, p0 > 0; unit spacelike vectors
/// (<v,v> = -1) are tangents and geodesic normals; lightlike vectors with
/// positive first component are ideal points.
inline double minkowski(const Vec3& p, const Vec3& q) {
  return p[0] * q[0] - p[1] * q[1] - p[2] * q[2];
}

/// diag(1,-1,-1) as a matrix, for form-preservation checks.
Mat3 form_matrix();

bool on_hyperboloid(const Vec3& p, double tol = 1e-10);

/// Rescale to <p,p> = 1; throws if p is not timelike with p0 > 0.
Vec3 normalize_point(const Vec3& p);

/// Rescale a spacelike vector to <v,v> = -1.
Vec3 normalize_spacelike(const Vec3& v);

/// Hyperbolic distance arccosh(<p,q>).  Pairings below 1 by at most 1e-9
/// (rounding) clamp to distance 0; anything lower throws.
Length dist(const Vec3& p, const Vec3& q);

/// max |M^T J M - J|, how far M is from preserving the form.
double form_residual(const Mat3& m);

/// A form-preserving map of the upper sheet.  Compositions and explicit
/// constructions assert form preservation in debug builds.
struct Isometry {
  Mat3 m;

  Isometry();
  explicit Isometry(const Mat3& mm);

  Vec3 operator()(const Vec3& p) const { return m * p; }
  Isometry operator*(const Isometry& o) const;
};

/// Translation by t along the geodesic x2 = 0, moving (1,0,0) toward +x1.
Isometry translation_x(double t);

/// Rotation by theta about (1,0,0), counterclockwise in the (x1,x2) chart.
Isometry rotation(double theta);

/// Parabolic fixing the ideal point (1,1,0); flows along horocycles based
/// there, with unit horocyclic speed on the horocycle through (1,0,0).
Isometry parabolic_std(double s);

/// Orthonormal frame [p | v | w] with det +1: maps (1,0,0) to p and the
/// tangent e1 to v.  Requires <p,p>=1, <v,v>=-1, <p,v>=0.
Isometry frame_at(const Vec3& p, const Vec3& v);

/// Unit tangent at p pointing toward q (p != q).
Vec3 unit_tangent(const Vec3& p, const Vec3& q);

/// cosh(t) p + sinh(t) v: the unit-speed geodesic from p with direction v.
Vec3 geodesic_point(const Vec3& p, const Vec3& v, double t);

/// Ideal endpoint (lightlike) of the ray t -> geodesic_point(p, v, t).
Vec3 forward_ideal(const Vec3& p, const Vec3& v);

/// Unit spacelike normal of the geodesic spanned by u1, u2 (finite or
/// ideal representatives).  Sign is arbitrary; flip via orient_normal.
Vec3 geodesic_normal(const Vec3& u1, const Vec3& u2);

/// Normal flipped so that <ref, n> > 0, i.e. ref is on the positive side.
Vec3 orient_normal(const Vec3& n, const Vec3& ref);

/// <p, n> = sinh of the signed distance from p to the geodesic with unit
/// normal n (positive side = side of the points with positive pairing).
inline double side_value(const Vec3& p, const Vec3& n) { return minkowski(p, n); }

/// Busemann level <p, omega> of p with respect to the ideal point omega.
/// Level sets are horocycles; smaller level = deeper into the cusp.
inline double busemann_level(const Vec3& p, const Vec3& omega) {
  return minkowski(p, omega);
}

/// Parameter t >= 0 with busemann_level(geodesic_point(p,v,t), omega) = u,
/// for a ray that descends toward the cusp at omega.  Throws if the ray
/// never reaches that level.
double ray_time_to_level(const Vec3& p, const Vec3& v, const Vec3& omega, double u);

/// Horocyclic arc length between two points of a common horocycle:
/// 2 sinh(d/2) for chordal distance d.
double chord_to_horocyclic_arc(double chord);

/// Minimum Busemann level along the geodesic chord [p, q].
double min_level_on_chord(const Vec3& p, const Vec3& q, const Vec3& omega);

} // namespace flute::hplane
