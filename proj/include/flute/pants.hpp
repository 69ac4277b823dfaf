#pragma once

#include <array>

#include "flute/hyptrig.hpp"

namespace flute::pants {

/// Cuff-length window [l, L] for the diameter bounds; requires 0 < l < L.
struct DiamBoundParams {
  Length l;
  Length L;
  DiamBoundParams(Length l_, Length L_);
};

/// The three boundary lengths of a pair of pants.  A zero entry encodes a
/// cusp; at most two cusps are supported (the three-cusped pants is not
/// handled by this library).
struct CuffTriple {
  std::array<Length, 3> cuffs;

  explicit CuffTriple(Length l1, Length l2, Length l3);

  int cusp_count() const;
  /// Nonzero cuffs in order; size 3 - cusp_count().
  std::array<Length, 3> geodesic_cuffs() const;
  Length min_geodesic() const;
  Length max_geodesic() const;
};

/// Cusped pants with the area-2 horoball neighborhood of each cusp removed.
/// Each removed horoball meets a half-pants hexagon in a horocyclic boundary
/// arc of length exactly 1.
struct TruncatedPants {
  CuffTriple base;
  static constexpr double horocycle_half_length = 1.0;

  explicit TruncatedPants(CuffTriple c);
};

/// Seam lengths of the half-pants hexagon of a cusp-free pants: the
/// perpendicular side opposite the half-cuff l_k/2 is
/// hexagon_opposite(l_i/2, l_j/2, l_k/2).  Result index k is the seam
/// opposite cuff k.  Throws std::domain_error when a cusp is present
/// (use truncated_seams).
std::array<Length, 3> seam_lengths(const CuffTriple& cuffs);

/// Side data of the truncated half-pants hexagon.  All values are exact
/// limits of the degenerating-hexagon family; the *_bound fields are the
/// analytic upper bounds from the proof chain, in terms of the pants' own
/// smallest (l) and largest (L) geodesic cuff.
///
/// One cusp (geodesic cuffs l1, l2):
///   z        = eta(l1) + eta(l2)          (side between the two half-cuffs)
///   x        = log((cosh(l1/2) + cosh(l2/2)) / sinh(l2/2))   (opposite l1/2)
///   y        = log((cosh(l1/2) + cosh(l2/2)) / sinh(l1/2))   (opposite l2/2)
///   x_bound  = y_bound = L/2 + log(2 / sinh(l/2)),  z_bound = 2 eta(l)
/// Two cusps (geodesic cuff l1):
///   x = y    = eta(l1)                      (sides flanking the half-cuff)
///   z        = log((cosh(l1/2) + 1) / 2)    (side between the horocycles)
///   x_bound  = eta(l),  z_bound = L/2 + 1
struct TruncatedSeams {
  int cusp_count;
  double z;
  double x;
  double y;
  double x_bound;
  double y_bound;
  double z_bound;
};

TruncatedSeams truncated_seams(const TruncatedPants& p);

/// K1(l) = log(2/sinh^2(l/2)) + log(cosh^2(l/2) + 1) + log 2.
double k1_term(Length l);

/// K(l) = (3/2) K1(l) + 2, the cusp-free diameter constant.
double k_thick(Length l);

/// Any pants with all cuffs in [l, L] has diameter strictly below
/// (3/2) L + K(l).
Length diameter_bound_thick(const DiamBoundParams& params);

/// Diameter bound for the truncated pants, with the proof-level constants:
///   one cusp : L + eta(l) + log(3/sinh(l/2)) + 5/2
///   two cusps: L/2 + eta(l) + 3/2
/// Note the two-cusp form is the sharper constant the proof derives; the
/// enclosing statement only claims L + K.  cusp_count outside {1,2} throws.
Length diameter_bound_truncated(const DiamBoundParams& params, int cusp_count);

/// Upper bound 2L + 2 eta(l) + 2 log(2/sinh(l/2)) + 1 on the perimeter of
/// the one-cusp truncated half-pants hexagon.
Length hexagon_perimeter_bound_one_cusp(const DiamBoundParams& params);

/// Minimum possible largest cuff of a pants whose (truncated) diameter is at
/// least diam: (2/3)(diam - K(l)), clamped below at 0.
Length cuff_bound_from_diameter(Length diam, const DiamBoundParams& params);

} // namespace flute::pants
