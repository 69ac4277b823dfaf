#pragma once

#include <optional>

namespace flute {

/// Nonnegative real in hyperbolic distance units. A value of 0 encodes a
/// cusp where the consuming operation explicitly permits one.
using Length = double;

namespace hyptrig {

/// Half-width eta(l) = arcsinh(1/sinh(l/2)) of the embedded collar around a
/// closed geodesic of length l.  Strictly decreasing, blows up as l -> 0+.
/// Throws std::domain_error for l <= 0 (cusps have no collar width here).
Length collar_width(Length l);

/// Side opposite c in a right-angled hexagon with alternating sides a, b, c:
///   cosh w = (cosh c + cosh a cosh b) / (sinh a sinh b).
/// Symmetric in (a, b).  c = 0 is permitted as a degenerate check value;
/// a <= 0 or b <= 0 throw std::domain_error.
Length hexagon_opposite(Length a, Length b, Length c);

/// Side opposite the right-angle corner of the unique right-angled pentagon
/// with adjacent sides b1, b2:  cosh c = sinh b1 sinh b2.
/// Returns std::nullopt when sinh b1 sinh b2 = 1 (relative tolerance 1e-12):
/// the pentagon degenerates into an ideal Lambert quadrilateral and callers
/// must branch on cusp vs geodesic.  Throws std::domain_error when
/// sinh b1 sinh b2 < 1 (no such pentagon) or when a side is nonpositive.
std::optional<Length> pentagon_opposite(Length b1, Length b2);

/// Pentagon side b = arcsinh(sqrt(cosh(target_cuff/4))) such that a square
/// assembled from four (b,b)-pentagons has hole cuff length target_cuff,
/// i.e. pentagon_opposite(b, b) == target_cuff/4 to machine precision.
Length square_side_for_cuff(Length target_cuff);

// log(sinh x) and log(cosh x) evaluated without overflow for large x.
double log_sinh(double x);
double log_cosh(double x);

} // namespace hyptrig
} // namespace flute
