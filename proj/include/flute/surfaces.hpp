#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flute/hyptrig.hpp"

namespace flute::surfaces {

/// Index (i,j) of the grid boundary component obtained by translating the
/// base component by (2ib, 2jb).
struct Label {
  int i = 0;
  int j = 0;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Inclusive index rectangle.
struct Window {
  int imin = 0, imax = 0, jmin = 0, jmax = 0;
  bool contains(const Label& l) const {
    return l.i >= imin && l.i <= imax && l.j >= jmin && l.j <= jmax;
  }
};

/// Cuff length 4 * pentagon_opposite(b, b) of the hole of one square.
/// Requires sinh b > 1.
Length hole_cuff_length(Length b);

/// Finite window of the grid of one-holed squares with side 2b.  The cusped
/// grid (sinh b = 1) carries cusps instead of holes and is only used as a
/// label carrier.
struct GridSurface {
  Length b = 0.0;
  Window window;
  bool cusped = false;

  static GridSurface make(Length b, Window w);
  static GridSurface make_cusped(Window w);
  std::vector<Label> labels() const;
};

/// The m x m block of one-holed squares, viewed as a surface with
/// quadrangular outer boundary.  Width is the outer side length 2mb; the
/// marked points are the four corners of the outer boundary.
struct QuadSurface {
  int m = 0;
  Length b = 0.0;
  Length width = 0.0;
  Length hole_cuff = 0.0;
  Length outer_perimeter = 0.0;
  std::array<double, 4> marked_points{};  // arclength positions along the boundary
};

QuadSurface build_square_grid(Length b, int m);

enum class SchemeKind {
  None,
  Qch,
  Reflection,
  Mixed,
  EndNonplanar,
  EndBoundaryAccumulated,
  EndCuspPants,
};

enum class EndModification { Nonplanar, BoundaryAccumulated, CuspPants };

/// Record that a two-cusp pants is attached to a boundary component.
struct Attachment {
  std::string kind;
  Length boundary_length = 0.0;
};

/// Rule-described involutive partial pairing of grid labels, with optional
/// per-pair twists (default 0; the bounds are twist-independent).
struct GluingScheme {
  SchemeKind kind = SchemeKind::None;
  std::map<std::pair<Label, Label>, double> twists;

  std::optional<Label> partner(const Label& l) const;
  double twist(const Label& l) const;
  /// Attachment for the cusp-pants end modification (j > 0 labels).
  std::optional<Attachment> attachment(const Label& l, Length b) const;
  /// Pairs with both labels inside the window, canonical order, no
  /// duplicates.
  std::vector<std::pair<Label, Label>> pairs_in_window(const Window& w) const;
  std::string name() const;
};

GluingScheme scheme_none();
GluingScheme scheme_qch();
GluingScheme scheme_reflection();
GluingScheme scheme_mixed();
GluingScheme scheme_end_modification(EndModification kind);

struct GluingBound {
  /// Exact global bound by rule inspection; nullopt = unbounded gluings.
  std::optional<int> global;
  /// Max |di| + |dj| over pairs with both labels inside the window.
  int window_max = 0;
};

GluingBound gluing_bound(const GluingScheme& scheme, const Window& w);

/// Lower bounds on a cuff of any pants decomposition of the plain grid:
/// curve_bound = max(0, 2mb - K(sys)) and the conservative form
/// (2/3)(2mb - K(sys)) coming from the width argument.
struct NoGluingBound {
  double curve_bound = 0.0;
  double conservative = 0.0;
};

NoGluingBound cuff_lower_bound_no_gluing(int m, Length b, Length sys);

/// min{ 8(m-1)b, (2/3)(2d(m/J - 2) - K(sys)) }, valid for m > 2J + 2
/// (throws otherwise); grows linearly in m for fixed J, d, b.
double cuff_lower_bound_bounded_gluing(int m, Length b, int J, double d, Length sys);

/// 8(m-1)b, a lower bound on the geodesic homotopic to the outer boundary
/// of the m x m block; exceeds the width 2mb for every m >= 2.
double outer_geodesic_lower_bound(int m, Length b);

/// Working systole of the grid: the hole cuff length.
Length systole_estimate(Length b);

/// Mesh sweep over hole-encircling loop classes (and two adjacent-pair
/// classes) in a 3x3 window; pass means no class is shorter than the
/// closed-form systole.
struct SystoleCrossCheck {
  Length systole = 0.0;
  double min_hole_loop = 0.0;
  double min_pair_loop = 0.0;
  bool pass = false;
};

SystoleCrossCheck systole_mesh_cross_check(Length b, double h = 0.15);

/// Grid gluing-scheme config document (JSON syntax):
///   {"b": 1.2, "scheme": "qch", "window": [imin, imax, jmin, jmax],
///    "twists": {"i,j->i',j'": 0.25, ...}}
/// Twist keys name a pair of the scheme; the canonical form orders each
/// pair with its lexicographically smaller label first.
struct SchemeConfig {
  Length b = 0.0;
  std::string scheme_name;
  Window window;
  std::map<std::string, double> twists;

  GluingScheme scheme() const;
};

SchemeConfig parse_scheme_config(const std::string& json_text);
std::string canonical_scheme_config(const SchemeConfig& config);
GluingScheme scheme_by_name(const std::string& name);

} // namespace flute::surfaces
