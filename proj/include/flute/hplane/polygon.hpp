#pragma once

#include <vector>

#include "flute/hplane/geom.hpp"

namespace flute::hplane {

/// One boundary side of a convex region: a geodesic segment, or a
/// horocyclic arc left by clipping a cusp.
struct RegionSide {
  Vec3 a;               // start (ccw orientation)
  Vec3 b;               // end
  Vec3 tangent;         // unit tangent at a toward b (geodesic sides)
  Vec3 normal;          // inward unit normal of the supporting geodesic
  double length = 0.0;  // geodesic length, or horocyclic arc length
  bool horocyclic = false;
  Isometry flow;        // horocyclic sides: frame at a; points are
  double flow_sign = 1; // flow(parabolic_std(flow_sign * s))(e0), s in [0,length]
};

/// Horoball removed from the region: points with level < `level` are cut.
struct HoroClip {
  Vec3 omega;
  double level = 0.0;
};

/// Intersection of geodesic half-planes, minus horoballs.  Sides are listed
/// counterclockwise; side index doubles as the boundary tag in meshes.
struct ConvexRegion {
  std::vector<RegionSide> sides;
  std::vector<HoroClip> clips;
  Vec3 center = Vec3(1.0, 0.0, 0.0);
  double max_radius = 0.0;

  /// margin > 0 keeps a strip of that width away from every side and clip.
  bool contains(const Vec3& p, double margin = 0.0) const;
};

/// Corners of the right-angled hexagon with alternating sides a, b, c
/// (side order a, w_c, b, w_a, c, w_b with w_* from hexagon_opposite).
/// Throws a runtime error if the construction fails to close.
std::vector<Vec3> build_right_hexagon(Length a, Length b, Length c);

/// Same hexagon as a meshable region; side tags 0..5 in walk order, so the
/// alternating input sides carry even tags.
ConvexRegion hexagon_region(Length a, Length b, Length c);

/// Quarter of the one-holed square R_b: the right-angled pentagon with
/// adjacent sides b.  Side order [edge, spoke, hole, spoke, edge] =
/// [b, alpha, c, alpha, b] with cosh c = sinh^2 b, sinh alpha = cosh b/sinh c.
/// Requires sinh b > 1.
ConvexRegion pentagon_region(Length b);

/// Pentagon side tags.
enum PentagonSide { kEdgeA = 0, kSpokeA = 1, kHole = 2, kSpokeB = 3, kEdgeB = 4 };

/// Truncated half-pants hexagon of a one-cusp pants with geodesic cuffs
/// l1, l2.  Side order (ccw): [z, l2/2, x, horocycle, y, l1/2].
ConvexRegion one_cusp_region(Length l1, Length l2);

enum OneCuspSide { kZ1 = 0, kCuff2Half = 1, kX1 = 2, kHoro1 = 3, kY1 = 4, kCuff1Half = 5 };

/// Doubly truncated half-pants hexagon of a two-cusp pants with geodesic
/// cuff l1.  Side order (ccw): [l1/2, x, horocycle, z, horocycle, x].
ConvexRegion two_cusp_region(Length l1);

enum TwoCuspSide { kCuffHalf = 0, kXRight = 1, kHoroRight = 2, kZ2 = 3, kHoroLeft = 4, kXLeft = 5 };

/// Region spanned by an explicit closed convex geodesic polygon; throws if
/// the corners are not in convex position.
ConvexRegion region_from_corners(const std::vector<Vec3>& corners);

} // namespace flute::hplane
