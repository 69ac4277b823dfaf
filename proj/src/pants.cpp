#include "flute/pants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flute::pants {

using hyptrig::collar_width;
using hyptrig::hexagon_opposite;

DiamBoundParams::DiamBoundParams(Length l_, Length L_) : l(l_), L(L_) {
  if (!(l > 0.0) || !(l < L))
    throw std::domain_error("DiamBoundParams: need 0 < l < L");
}

CuffTriple::CuffTriple(Length l1, Length l2, Length l3) : cuffs{l1, l2, l3} {
  int zeros = 0;
  for (Length c : cuffs) {
    if (c < 0.0) throw std::domain_error("CuffTriple: cuff lengths must be nonnegative");
    if (c == 0.0) ++zeros;
  }
  if (zeros > 2)
    throw std::domain_error("CuffTriple: the three-cusped pants is not supported");
}

int CuffTriple::cusp_count() const {
  int zeros = 0;
  for (Length c : cuffs)
    if (c == 0.0) ++zeros;
  return zeros;
}

std::array<Length, 3> CuffTriple::geodesic_cuffs() const {
  std::array<Length, 3> out{0.0, 0.0, 0.0};
  int n = 0;
  for (Length c : cuffs)
    if (c > 0.0) out[n++] = c;
  return out;
}

Length CuffTriple::min_geodesic() const {
  Length m = 0.0;
  for (Length c : cuffs)
    if (c > 0.0 && (m == 0.0 || c < m)) m = c;
  return m;
}

Length CuffTriple::max_geodesic() const {
  Length m = 0.0;
  for (Length c : cuffs) m = std::max(m, c);
  return m;
}

TruncatedPants::TruncatedPants(CuffTriple c) : base(c) {
  if (base.cusp_count() < 1)
    throw std::domain_error("TruncatedPants: at least one cusp required");
}

std::array<Length, 3> seam_lengths(const CuffTriple& cuffs) {
  if (cuffs.cusp_count() != 0)
    throw std::domain_error("seam_lengths: cusp present, use truncated_seams");
  const Length h0 = cuffs.cuffs[0] / 2.0;
  const Length h1 = cuffs.cuffs[1] / 2.0;
  const Length h2 = cuffs.cuffs[2] / 2.0;
  return {hexagon_opposite(h1, h2, h0), hexagon_opposite(h2, h0, h1),
          hexagon_opposite(h0, h1, h2)};
}

TruncatedSeams truncated_seams(const TruncatedPants& p) {
  const int cusps = p.base.cusp_count();
  const auto geod = p.base.geodesic_cuffs();
  const Length l = p.base.min_geodesic();
  const Length L = p.base.max_geodesic();
  TruncatedSeams s{};
  s.cusp_count = cusps;
  if (cusps == 1) {
    const Length l1 = geod[0], l2 = geod[1];
    s.z = collar_width(l1) + collar_width(l2);
    const double num = std::cosh(l1 / 2.0) + std::cosh(l2 / 2.0);
    s.x = std::log(num / std::sinh(l2 / 2.0));
    s.y = std::log(num / std::sinh(l1 / 2.0));
    s.x_bound = L / 2.0 + std::log(2.0 / std::sinh(l / 2.0));
    s.y_bound = s.x_bound;
    s.z_bound = 2.0 * collar_width(l);
  } else {
    const Length l1 = geod[0];
    s.x = collar_width(l1);
    s.y = s.x;
    s.z = std::log((std::cosh(l1 / 2.0) + 1.0) / 2.0);
    s.x_bound = collar_width(l);
    s.y_bound = s.x_bound;
    s.z_bound = L / 2.0 + 1.0;
  }
  return s;
}

double k1_term(Length l) {
  if (!(l > 0.0)) throw std::domain_error("k1_term: l must be positive");
  const double sh = std::sinh(l / 2.0);
  const double ch = std::cosh(l / 2.0);
  return std::log(2.0 / (sh * sh)) + std::log(ch * ch + 1.0) + std::log(2.0);
}

double k_thick(Length l) { return 1.5 * k1_term(l) + 2.0; }

Length diameter_bound_thick(const DiamBoundParams& params) {
  return 1.5 * params.L + k_thick(params.l);
}

Length diameter_bound_truncated(const DiamBoundParams& params, int cusp_count) {
  const double eta = collar_width(params.l);
  if (cusp_count == 1)
    return params.L + eta + std::log(3.0 / std::sinh(params.l / 2.0)) + 2.5;
  if (cusp_count == 2) return params.L / 2.0 + eta + 1.5;
  throw std::domain_error("diameter_bound_truncated: cusp_count must be 1 or 2");
}

Length hexagon_perimeter_bound_one_cusp(const DiamBoundParams& params) {
  return 2.0 * params.L + 2.0 * collar_width(params.l) +
         2.0 * std::log(2.0 / std::sinh(params.l / 2.0)) + 1.0;
}

Length cuff_bound_from_diameter(Length diam, const DiamBoundParams& params) {
  if (diam < 0.0) throw std::domain_error("cuff_bound_from_diameter: diam must be >= 0");
  return std::max(0.0, (2.0 / 3.0) * (diam - k_thick(params.l)));
}

} // namespace flute::pants
