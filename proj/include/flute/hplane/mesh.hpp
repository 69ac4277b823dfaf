#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "flute/hplane/polygon.hpp"
#include "flute/pants.hpp"

namespace flute::hplane {

struct MeshOptions {
  double interior_factor = 0.7;   // interior sample spacing, as a fraction of h
  double boundary_factor = 0.5;   // boundary sample spacing, as a fraction of h
  double interior_margin = 0.3;   // keep-away strip next to sides, * boundary spacing
  double radius_floor = 2.2;      // edge radius >= floor * interior spacing
  double radius_growth = 0.5;     // edge radius also >= spacing * sqrt(growth / h)
  int diameter_source_cap = 0;    // 0 = exact max over all sources
};

struct MeshVertex {
  Vec3 pos;          // position in the chart of its copy
  int copy = 0;      // polygon copy index within a glued complex
  int tag = -1;      // boundary side index, -1 for interior vertices
  double param = 0;  // arclength along the tagged side
};

/// Graph approximation of a polygon (or glued complex of polygons).  Every
/// geodesic edge weight is the hyperbolic distance of its endpoints; edges
/// along a horocyclic boundary carry the horocyclic arc length instead
/// (weight = 2 sinh(chord/2)); gluing connectors have weight 0.
struct PolygonMesh {
  std::vector<MeshVertex> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<double> weights;
  std::vector<std::uint8_t> horocyclic_edge;
  double resolution = 0.0;

  /// [copy][side tag] -> vertex ids in order along the side.
  std::vector<std::vector<std::vector<int>>> side_samples;
  /// Connector edge indices per glue call, in gluing order.
  std::vector<std::vector<int>> glue_groups;

  // CSR adjacency, built by finalize().
  std::vector<int> adj_off;
  std::vector<int> adj_to;
  std::vector<double> adj_w;
  std::vector<int> adj_eid;

  void finalize();
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool connected() const;
  const std::vector<int>& samples(int copy, int side) const;
};

/// Mesh a single convex region (one copy).  Interior is sampled on a polar
/// grid so that every point of the region is within h of a vertex; boundary
/// sides are sampled at spacing <= boundary_factor*h with shared corners.
PolygonMesh mesh_region(const ConvexRegion& region, double h,
                        const MeshOptions& opts = {});

/// Mesh the convex geodesic polygon with the given corners.
PolygonMesh mesh_polygon(const std::vector<Vec3>& corners, double h,
                         const MeshOptions& opts = {});

/// Assembles copies of meshed regions into one graph.  Gluing two sides
/// inserts zero-weight connector edges between matching samples, so each
/// copy keeps its own chart and glue crossings stay identifiable.
class ComplexBuilder {
 public:
  int add_copy(const PolygonMesh& single_copy_mesh);
  /// Sample counts of the two sides must match; reversed flips the second
  /// side's order.  Returns the glue group index.
  int glue(int copy_a, int side_a, int copy_b, int side_b, bool reversed);
  PolygonMesh build() const;

 private:
  std::vector<PolygonMesh> copies_;
  std::vector<int> offsets_;
  struct GlueRec { int a, sa, b, sb; bool reversed; };
  std::vector<GlueRec> glue_;
};

/// Single-source / multi-source shortest-path distances.  `hops`, when
/// given, receives the number of positive-weight edges on the shortest
/// path found.
void dijkstra(const PolygonMesh& mesh, std::span<const int> sources,
              std::vector<double>& dist, std::vector<int>* hops = nullptr);

struct DiameterEstimate {
  double lower = 0.0;      // true intrinsic diameter is >= this
  double upper = 0.0;      // ... and <= this (graph_max + cover + slack)
  double graph_max = 0.0;  // largest graph distance found
  double cover = 0.0;      // covering radius of the source set (0 = exact)
  double slack = 0.0;      // 2h coverage allowance
  int sources = 0;
};

/// Bracket the intrinsic diameter: upper = max graph eccentricity over a
/// source set plus its covering radius plus 2h; lower = the largest chordal
/// distance between two vertices of a common copy.  With
/// diameter_source_cap = 0 (or vertex count below the cap) every vertex is
/// a source and cover = 0.  Throws on a disconnected mesh.
DiameterEstimate estimate_diameter(const PolygonMesh& mesh,
                                   const MeshOptions& opts = {});

struct PantsMesh {
  PolygonMesh mesh;
  int cusp_count = 0;
  /// [cuff index] -> the (copy, side tag) pairs whose union is that cuff;
  /// cuffs are indexed by their position among the nonzero entries.
  std::vector<std::vector<std::pair<int, int>>> cuff_sides;
  std::vector<std::pair<int, int>> horocycle_sides;
  std::vector<std::pair<int, int>> seam_sides;
};

/// Mesh of the pants with the given cuffs (two mirrored half-pants regions
/// glued along their seams).  Cusped pants are truncated at the length-1
/// horocycles.  cusp_count must be <= 2.
PantsMesh pants_mesh(const pants::CuffTriple& cuffs, double h,
                     const MeshOptions& opts = {});

/// Double of the pants across cuff `cuff_index` (mirror gluing, twist 0).
/// The first pants occupies copies 0,1 with the same vertex ids as in
/// pants_mesh, so intrinsic-vs-extrinsic distances can be compared.
PolygonMesh double_along_cuff(const pants::CuffTriple& cuffs, int cuff_index,
                              double h, const MeshOptions& opts = {});

/// Window of nx-by-ny one-holed squares R_b glued from pentagon copies.
struct SquareWindowMesh {
  PolygonMesh mesh;
  int nx = 0, ny = 0;
  /// Hole boundary sample ids per square, row-major (iy * nx + ix).
  std::vector<std::vector<int>> hole_samples;
  /// Glue group of the spoke at the midpoint of edge k (0=N,1=W,2=S,3=E)
  /// of each square, row-major.
  std::vector<std::array<int, 4>> spoke_groups;
};

SquareWindowMesh square_window_mesh(Length b, int nx, int ny, double h,
                                    const MeshOptions& opts = {});

struct SeparationEstimate {
  double estimate = 0.0;         // graph distance between the two hole boundaries
  double certified_lower = 0.0;  // estimate - hops * h, clamped at 0
  int hops = 0;
};

/// Minimum distance between the hole boundaries of two adjacent squares of
/// the b-grid, from a two-square mesh.  The certified lower bound subtracts
/// one h per positive-weight hop of the minimizing path.
SeparationEstimate boundary_separation(Length b, double h = 0.05,
                                       const MeshOptions& opts = {});

/// Shortest cycle whose crossing count of the flagged edges is odd.  Seeds
/// default to the endpoints of flagged edges (subsampled).
double shortest_odd_loop(const PolygonMesh& mesh, const std::vector<char>& edge_flag,
                         int max_seeds = 48);

/// Shortest cycle crossing both flagged sets an odd number of times.
double shortest_odd_odd_loop(const PolygonMesh& mesh, const std::vector<char>& flag1,
                             const std::vector<char>& flag2, int max_seeds = 48);

/// Plain-text dump: one record per line ("v id x0 x1 x2 copy tag param",
/// then "e u v weight").
void write_mesh_text(const PolygonMesh& mesh, std::ostream& os);

} // namespace flute::hplane
