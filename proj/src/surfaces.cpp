#include "flute/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flute/hplane/mesh.hpp"
#include "flute/pants.hpp"

namespace flute::surfaces {

Length hole_cuff_length(Length b) {
  const auto c = hyptrig::pentagon_opposite(b, b);
  if (!c) throw std::domain_error("hole_cuff_length: b = arcsinh(1) gives a cusp, not a hole");
  return 4.0 * *c;
}

GridSurface GridSurface::make(Length b, Window w) {
  if (!(std::sinh(b) > 1.0))
    throw std::domain_error("GridSurface: requires sinh b > 1 (use make_cusped)");
  return {b, w, false};
}

GridSurface GridSurface::make_cusped(Window w) {
  return {std::asinh(1.0), w, true};
}

std::vector<Label> GridSurface::labels() const {
  std::vector<Label> out;
  for (int j = window.jmin; j <= window.jmax; ++j)
    for (int i = window.imin; i <= window.imax; ++i) out.push_back({i, j});
  return out;
}

QuadSurface build_square_grid(Length b, int m) {
  if (m < 1) throw std::domain_error("build_square_grid: m must be >= 1");
  if (!(std::sinh(b) > 1.0))
    throw std::domain_error("build_square_grid: requires sinh b > 1");
  QuadSurface q;
  q.m = m;
  q.b = b;
  q.width = 2.0 * m * b;
  q.hole_cuff = hole_cuff_length(b);
  q.outer_perimeter = 8.0 * m * b;
  q.marked_points = {0.0, 2.0 * m * b, 4.0 * m * b, 6.0 * m * b};
  return q;
}

namespace {

std::optional<Label> qch_partner(const Label& l) {
  return (l.i % 2 == 0) ? Label{l.i + 1, l.j} : Label{l.i - 1, l.j};
}

// Even/odd in the qch rule pairs 2i with 2i+1; for negative indices the
// C++ remainder needs folding.
bool qch_even(int i) { return ((i % 2) + 2) % 2 == 0; }

std::optional<Label> qch_partner_signed(const Label& l) {
  return qch_even(l.i) ? Label{l.i + 1, l.j} : Label{l.i - 1, l.j};
}

} // namespace

std::optional<Label> GluingScheme::partner(const Label& l) const {
  switch (kind) {
    case SchemeKind::None:
    case SchemeKind::EndBoundaryAccumulated:
    case SchemeKind::EndCuspPants:
      return std::nullopt;
    case SchemeKind::Qch:
      return qch_partner_signed(l);
    case SchemeKind::Reflection:
      if (l.i == 0) return std::nullopt;
      return Label{-l.i, l.j};
    case SchemeKind::Mixed:
      if (l.j < 0) {
        if (l.i == 0) return std::nullopt;
        return Label{-l.i, l.j};
      }
      return qch_partner_signed(l);
    case SchemeKind::EndNonplanar:
      if (l.j > 0) return qch_partner_signed(l);
      return std::nullopt;
  }
  return std::nullopt;
}

double GluingScheme::twist(const Label& l) const {
  const auto p = partner(l);
  if (!p) return 0.0;
  const auto key = std::minmax(l, *p);
  const auto it = twists.find({key.first, key.second});
  return it == twists.end() ? 0.0 : it->second;
}

std::optional<Attachment> GluingScheme::attachment(const Label& l, Length b) const {
  if (kind != SchemeKind::EndCuspPants || l.j <= 0) return std::nullopt;
  return Attachment{"two_cusp_pants", hole_cuff_length(b)};
}

std::vector<std::pair<Label, Label>> GluingScheme::pairs_in_window(const Window& w) const {
  std::vector<std::pair<Label, Label>> out;
  for (int j = w.jmin; j <= w.jmax; ++j)
    for (int i = w.imin; i <= w.imax; ++i) {
      const Label l{i, j};
      const auto p = partner(l);
      if (!p || !w.contains(*p)) continue;
      if (*p < l) continue;  // emit each pair once
      out.push_back({l, *p});
    }
  return out;
}

std::string GluingScheme::name() const {
  switch (kind) {
    case SchemeKind::None: return "none";
    case SchemeKind::Qch: return "qch";
    case SchemeKind::Reflection: return "reflection";
    case SchemeKind::Mixed: return "mixed";
    case SchemeKind::EndNonplanar: return "end_nonplanar";
    case SchemeKind::EndBoundaryAccumulated: return "end_boundary_accumulated";
    case SchemeKind::EndCuspPants: return "end_cusp_pants";
  }
  return "?";
}

GluingScheme scheme_none() { return {SchemeKind::None, {}}; }
GluingScheme scheme_qch() { return {SchemeKind::Qch, {}}; }
GluingScheme scheme_reflection() { return {SchemeKind::Reflection, {}}; }
GluingScheme scheme_mixed() { return {SchemeKind::Mixed, {}}; }

GluingScheme scheme_end_modification(EndModification kind) {
  switch (kind) {
    case EndModification::Nonplanar: return {SchemeKind::EndNonplanar, {}};
    case EndModification::BoundaryAccumulated: return {SchemeKind::EndBoundaryAccumulated, {}};
    case EndModification::CuspPants: return {SchemeKind::EndCuspPants, {}};
  }
  throw std::domain_error("scheme_end_modification: unknown kind");
}

GluingBound gluing_bound(const GluingScheme& scheme, const Window& w) {
  GluingBound out;
  switch (scheme.kind) {
    case SchemeKind::None:
    case SchemeKind::EndBoundaryAccumulated:
    case SchemeKind::EndCuspPants:
      out.global = 0;
      break;
    case SchemeKind::Qch:
    case SchemeKind::EndNonplanar:
      out.global = 1;
      break;
    case SchemeKind::Reflection:
    case SchemeKind::Mixed:
      out.global = std::nullopt;
      break;
  }
  for (const auto& [a, b] : scheme.pairs_in_window(w))
    out.window_max = std::max(out.window_max, std::abs(a.i - b.i) + std::abs(a.j - b.j));
  return out;
}

NoGluingBound cuff_lower_bound_no_gluing(int m, Length b, Length sys) {
  if (m < 1) throw std::domain_error("cuff_lower_bound_no_gluing: m must be >= 1");
  if (!(sys > 0.0)) throw std::domain_error("cuff_lower_bound_no_gluing: sys must be positive");
  const double k = pants::k_thick(sys);
  const double width = 2.0 * m * b;
  return {std::max(0.0, width - k), std::max(0.0, (2.0 / 3.0) * (width - k))};
}

double cuff_lower_bound_bounded_gluing(int m, Length b, int J, double d, Length sys) {
  if (J < 1) throw std::domain_error("cuff_lower_bound_bounded_gluing: J must be >= 1");
  if (m <= 2 * J + 2)
    throw std::domain_error("cuff_lower_bound_bounded_gluing: requires m > 2J + 2");
  if (!(d > 0.0)) throw std::domain_error("cuff_lower_bound_bounded_gluing: d must be positive");
  const double k = pants::k_thick(sys);
  const double via_outer = 8.0 * (m - 1) * b;
  const double via_width = (2.0 / 3.0) * (2.0 * d * (static_cast<double>(m) / J - 2.0) - k);
  return std::max(0.0, std::min(via_outer, via_width));
}

double outer_geodesic_lower_bound(int m, Length b) {
  if (m < 2) throw std::domain_error("outer_geodesic_lower_bound: m must be >= 2");
  return 8.0 * (m - 1) * b;
}

Length systole_estimate(Length b) { return hole_cuff_length(b); }

SystoleCrossCheck systole_mesh_cross_check(Length b, double h) {
  const auto w = hplane::square_window_mesh(b, 3, 3, h);
  const auto nedges = w.mesh.edges.size();

  auto ray_flags = [&](int ix, int iy) {
    std::vector<char> flags(nedges, 0);
    auto mark = [&](int group) {
      for (int e : w.mesh.glue_groups[group]) flags[e] = 1;
    };
    mark(w.spoke_groups[iy * 3 + ix][0]);  // own N spoke
    for (int jy = iy + 1; jy < 3; ++jy) {
      mark(w.spoke_groups[jy * 3 + ix][2]);  // S spoke of the square above
      mark(w.spoke_groups[jy * 3 + ix][0]);  // and its N spoke
    }
    return flags;
  };

  SystoleCrossCheck out;
  out.systole = systole_estimate(b);
  out.min_hole_loop = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < 3; ++iy)
    for (int ix = 0; ix < 3; ++ix)
      out.min_hole_loop =
          std::min(out.min_hole_loop, hplane::shortest_odd_loop(w.mesh, ray_flags(ix, iy)));

  const double pair_h =
      hplane::shortest_odd_odd_loop(w.mesh, ray_flags(0, 1), ray_flags(1, 1));
  const double pair_v =
      hplane::shortest_odd_odd_loop(w.mesh, ray_flags(1, 0), ray_flags(1, 1));
  out.min_pair_loop = std::min(pair_h, pair_v);

  const double tol = 1e-6;
  out.pass = out.min_hole_loop >= out.systole - tol && out.min_pair_loop >= out.systole - tol;
  return out;
}

namespace {

std::string pair_key(const Label& a, const Label& b) {
  std::ostringstream os;
  os << a.i << "," << a.j << "->" << b.i << "," << b.j;
  return os.str();
}

std::pair<Label, Label> parse_pair_key(const std::string& key) {
  Label a, b;
  char c1, c2, c3, c4;
  std::istringstream is(key);
  if (!(is >> a.i >> c1 >> a.j >> c2 >> c3 >> b.i >> c4 >> b.j) || c1 != ',' ||
      c2 != '-' || c3 != '>' || c4 != ',')
    throw std::invalid_argument("scheme config: bad twist key '" + key + "'");
  return {a, b};
}

} // namespace

GluingScheme scheme_by_name(const std::string& name) {
  if (name == "none") return scheme_none();
  if (name == "qch") return scheme_qch();
  if (name == "reflection") return scheme_reflection();
  if (name == "mixed") return scheme_mixed();
  if (name == "end_nonplanar") return scheme_end_modification(EndModification::Nonplanar);
  if (name == "end_boundary_accumulated")
    return scheme_end_modification(EndModification::BoundaryAccumulated);
  if (name == "end_cusp_pants") return scheme_end_modification(EndModification::CuspPants);
  throw std::invalid_argument("unknown scheme name '" + name + "'");
}

GluingScheme SchemeConfig::scheme() const {
  GluingScheme s = scheme_by_name(scheme_name);
  for (const auto& [key, value] : twists) {
    const auto [a, b] = parse_pair_key(key);
    const auto p = s.partner(a);
    if (!p || !(*p == b))
      throw std::invalid_argument("scheme config: twist key '" + key +
                                  "' does not name a pair of scheme " + scheme_name);
    const auto mm = std::minmax(a, b);
    s.twists[{mm.first, mm.second}] = value;
  }
  return s;
}

SchemeConfig parse_scheme_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scheme config: invalid JSON: ") + e.what());
  }
  SchemeConfig cfg;
  if (!j.contains("b") || !j["b"].is_number())
    throw std::invalid_argument("scheme config: missing numeric field 'b'");
  cfg.b = j["b"].get<double>();
  if (!j.contains("scheme") || !j["scheme"].is_string())
    throw std::invalid_argument("scheme config: missing string field 'scheme'");
  cfg.scheme_name = j["scheme"].get<std::string>();
  if (!j.contains("window") || !j["window"].is_array() || j["window"].size() != 4)
    throw std::invalid_argument("scheme config: 'window' must be [imin, imax, jmin, jmax]");
  cfg.window = {j["window"][0].get<int>(), j["window"][1].get<int>(),
                j["window"][2].get<int>(), j["window"][3].get<int>()};
  if (cfg.window.imin > cfg.window.imax || cfg.window.jmin > cfg.window.jmax)
    throw std::invalid_argument("scheme config: empty window");
  if (j.contains("twists")) {
    if (!j["twists"].is_object())
      throw std::invalid_argument("scheme config: 'twists' must be an object");
    for (const auto& [key, value] : j["twists"].items()) {
      if (!value.is_number())
        throw std::invalid_argument("scheme config: twist values must be numbers");
      cfg.twists[key] = value.get<double>();
    }
  }
  const bool needs_holes = cfg.scheme_name != "none";
  if (needs_holes && !(std::sinh(cfg.b) > 1.0))
    throw std::invalid_argument("scheme config: gluing schemes require sinh b > 1");
  if (!needs_holes && !(std::sinh(cfg.b) >= 1.0 - 1e-12))
    throw std::invalid_argument("scheme config: b must be at least arcsinh(1)");
  cfg.scheme();  // validates twist keys
  return cfg;
}

std::string canonical_scheme_config(const SchemeConfig& config) {
  const GluingScheme s = config.scheme();
  nlohmann::json j;
  j["b"] = config.b;
  j["scheme"] = config.scheme_name;
  j["window"] = {config.window.imin, config.window.imax, config.window.jmin,
                 config.window.jmax};
  nlohmann::json tw = nlohmann::json::object();
  for (const auto& [pair, value] : s.twists) tw[pair_key(pair.first, pair.second)] = value;
  j["twists"] = tw;
  return j.dump();
}

} // namespace flute::surfaces
