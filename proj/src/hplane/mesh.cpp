#include "flute/hplane/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace flute::hplane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Isometry inverse(const Isometry& iso) {
  const Mat3 j = form_matrix();
  return Isometry(j * iso.m.transpose() * j);
}

ConvexRegion recentered(const ConvexRegion& r, Isometry* used) {
  const Vec3 t = unit_tangent(r.center, r.sides[0].a);
  const Isometry m = inverse(frame_at(r.center, t));
  ConvexRegion out = r;
  for (auto& s : out.sides) {
    s.a = normalize_point(m(s.a));
    s.b = normalize_point(m(s.b));
    s.normal = m(s.normal);
    if (s.horocyclic)
      s.flow = m * s.flow;
    else
      s.tangent = m(s.tangent);
  }
  for (auto& c : out.clips) c.omega = m(c.omega);
  out.center = Vec3(1.0, 0.0, 0.0);
  if (used) *used = m;
  return out;
}

struct EdgeKey {
  std::size_t operator()(std::int64_t k) const { return std::hash<std::int64_t>()(k); }
};

std::int64_t key_of(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(u) * n + v;
}

} // namespace

void PolygonMesh::finalize() {
  const int n = vertex_count();
  adj_off.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++adj_off[e[0] + 1];
    ++adj_off[e[1] + 1];
  }
  for (int i = 0; i < n; ++i) adj_off[i + 1] += adj_off[i];
  adj_to.assign(adj_off[n], 0);
  adj_w.assign(adj_off[n], 0.0);
  adj_eid.assign(adj_off[n], 0);
  std::vector<int> cursor(adj_off.begin(), adj_off.end() - 1);
  for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
    const auto& e = edges[ei];
    adj_to[cursor[e[0]]] = e[1];
    adj_w[cursor[e[0]]] = weights[ei];
    adj_eid[cursor[e[0]]++] = ei;
    adj_to[cursor[e[1]]] = e[0];
    adj_w[cursor[e[1]]] = weights[ei];
    adj_eid[cursor[e[1]]++] = ei;
  }
}

bool PolygonMesh::connected() const {
  const int n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int k = adj_off[u]; k < adj_off[u + 1]; ++k) {
      const int v = adj_to[k];
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

const std::vector<int>& PolygonMesh::samples(int copy, int side) const {
  return side_samples.at(copy).at(side);
}

PolygonMesh mesh_region(const ConvexRegion& region_in, double h, const MeshOptions& opts) {
  if (!(h > 0.0)) throw std::domain_error("mesh_region: resolution must be positive");
  const ConvexRegion region = recentered(region_in, nullptr);
  const double s_int = opts.interior_factor * h;
  const double s_bnd = opts.boundary_factor * h;
  const double margin = opts.interior_margin * s_bnd;
  const int nsides = static_cast<int>(region.sides.size());

  PolygonMesh mesh;
  mesh.resolution = h;

  auto add_vertex = [&](const Vec3& p, int tag, double param) {
    mesh.vertices.push_back({p, 0, tag, param});
    return static_cast<int>(mesh.vertices.size()) - 1;
  };

  // Corners first (one shared vertex per side start), then per-side samples.
  std::vector<int> corner_id(nsides);
  for (int i = 0; i < nsides; ++i)
    corner_id[i] = add_vertex(region.sides[i].a, i, 0.0);

  std::vector<std::vector<int>> side_ids(nsides);
  const Vec3 e0(1.0, 0.0, 0.0);
  for (int i = 0; i < nsides; ++i) {
    const auto& s = region.sides[i];
    auto& ids = side_ids[i];
    ids.push_back(corner_id[i]);
    const int nseg = std::max(1, static_cast<int>(std::ceil(s.length / s_bnd)));
    for (int j = 1; j < nseg; ++j) {
      const double t = s.length * j / nseg;
      Vec3 p;
      if (s.horocyclic)
        p = s.flow(parabolic_std(s.flow_sign * t)(e0));
      else
        p = geodesic_point(s.a, s.tangent, t);
      ids.push_back(add_vertex(normalize_point(p), i, t));
    }
    ids.push_back(corner_id[(i + 1) % nsides]);
  }

  // Interior polar grid around the center.
  const int nrings = static_cast<int>(std::ceil(region.max_radius / s_int)) + 1;
  if (region.contains(e0, margin)) add_vertex(e0, -1, 0.0);
  for (int k = 1; k <= nrings; ++k) {
    const double r = k * s_int;
    const double ring_len = 2.0 * std::numbers::pi * std::sinh(r);
    const int nk = std::max(6, static_cast<int>(std::ceil(ring_len / s_int)));
    const double offset = std::fmod(0.618033988749895 * k, 1.0);
    for (int j = 0; j < nk; ++j) {
      const double th = 2.0 * std::numbers::pi * (j + offset) / nk;
      const Vec3 p(std::cosh(r), std::sinh(r) * std::cos(th), std::sinh(r) * std::sin(th));
      if (region.contains(p, margin)) add_vertex(p, -1, 0.0);
    }
  }

  const int n = mesh.vertex_count();
  std::unordered_set<std::int64_t, EdgeKey> boundary_pairs;
  auto add_edge = [&](int u, int v, double w, bool horo) {
    mesh.edges.push_back({u, v});
    mesh.weights.push_back(w);
    mesh.horocyclic_edge.push_back(horo ? 1 : 0);
  };

  // Consecutive boundary samples; horocyclic sides carry arc lengths.
  for (int i = 0; i < nsides; ++i) {
    const auto& s = region.sides[i];
    const auto& ids = side_ids[i];
    for (std::size_t j = 0; j + 1 < ids.size(); ++j) {
      const int u = ids[j], v = ids[j + 1];
      double w;
      if (s.horocyclic)
        w = s.length / (static_cast<double>(ids.size()) - 1.0);
      else
        w = dist(mesh.vertices[u].pos, mesh.vertices[v].pos);
      add_edge(u, v, w, s.horocyclic);
      boundary_pairs.insert(key_of(u, v, n));
    }
  }

  // Neighborhood edges: all pairs within the connection radius, bucketed by
  // distance from the center.  Chords between region points stay inside by
  // convexity; only horoball clips need a dip check.
  const double rho = s_int * std::max(opts.radius_floor, std::sqrt(opts.radius_growth / h));
  const double cosh_rho = std::cosh(rho);
  const double clip_guard = std::cosh(rho / 2.0) * 1.05;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> rad(n);
  for (int i = 0; i < n; ++i) rad[i] = std::acosh(std::max(1.0, mesh.vertices[i].pos[0]));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rad[a] < rad[b]; });

  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < order.size(); ++hi) {
    const int v = order[hi];
    while (rad[v] - rad[order[lo]] > rho) ++lo;
    for (std::size_t k = lo; k < hi; ++k) {
      const int u = order[k];
      const double pairing = minkowski(mesh.vertices[u].pos, mesh.vertices[v].pos);
      if (pairing > cosh_rho) continue;
      if (boundary_pairs.count(key_of(u, v, n))) continue;
      bool dips = false;
      for (const auto& clip : region.clips) {
        const double la = busemann_level(mesh.vertices[u].pos, clip.omega);
        const double lb = busemann_level(mesh.vertices[v].pos, clip.omega);
        if (std::min(la, lb) < clip.level * clip_guard) {
          if (min_level_on_chord(mesh.vertices[u].pos, mesh.vertices[v].pos, clip.omega) <
              clip.level * (1.0 - 1e-12)) {
            dips = true;
            break;
          }
        }
      }
      if (dips) continue;
      add_edge(u, v, pairing <= 1.0 ? 0.0 : std::acosh(pairing), false);
    }
  }

  mesh.side_samples.push_back(std::move(side_ids));
  mesh.finalize();
  if (!mesh.connected())
    throw std::runtime_error("mesh_region: resolution too coarse, mesh graph is disconnected");
  return mesh;
}

PolygonMesh mesh_polygon(const std::vector<Vec3>& corners, double h, const MeshOptions& opts) {
  return mesh_region(region_from_corners(corners), h, opts);
}

int ComplexBuilder::add_copy(const PolygonMesh& single_copy_mesh) {
  if (single_copy_mesh.side_samples.size() != 1)
    throw std::invalid_argument("ComplexBuilder: expected a single-copy mesh");
  copies_.push_back(single_copy_mesh);
  return static_cast<int>(copies_.size()) - 1;
}

int ComplexBuilder::glue(int copy_a, int side_a, int copy_b, int side_b, bool reversed) {
  glue_.push_back({copy_a, side_a, copy_b, side_b, reversed});
  return static_cast<int>(glue_.size()) - 1;
}

PolygonMesh ComplexBuilder::build() const {
  PolygonMesh out;
  out.resolution = copies_.empty() ? 0.0 : copies_[0].resolution;
  std::vector<int> offsets;
  int base = 0;
  for (std::size_t c = 0; c < copies_.size(); ++c) {
    const auto& m = copies_[c];
    offsets.push_back(base);
    for (const auto& v : m.vertices) {
      MeshVertex nv = v;
      nv.copy = static_cast<int>(c);
      out.vertices.push_back(nv);
    }
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
      out.edges.push_back({m.edges[e][0] + base, m.edges[e][1] + base});
      out.weights.push_back(m.weights[e]);
      out.horocyclic_edge.push_back(m.horocyclic_edge[e]);
    }
    std::vector<std::vector<int>> sides;
    for (const auto& list : m.side_samples[0]) {
      std::vector<int> shifted;
      shifted.reserve(list.size());
      for (int id : list) shifted.push_back(id + base);
      sides.push_back(std::move(shifted));
    }
    out.side_samples.push_back(std::move(sides));
    base += m.vertex_count();
  }

  std::unordered_set<std::int64_t, EdgeKey> seen;
  for (const auto& g : glue_) {
    const auto& la = out.side_samples[g.a][g.sa];
    std::vector<int> lb = out.side_samples[g.b][g.sb];
    if (g.reversed) std::reverse(lb.begin(), lb.end());
    if (la.size() != lb.size())
      throw std::runtime_error("ComplexBuilder: glued sides have mismatched sampling");
    std::vector<int> group;
    for (std::size_t i = 0; i < la.size(); ++i) {
      if (la[i] == lb[i]) continue;
      const auto key = key_of(la[i], lb[i], static_cast<int>(out.vertices.size()));
      if (!seen.insert(key).second) continue;
      out.edges.push_back({la[i], lb[i]});
      out.weights.push_back(0.0);
      out.horocyclic_edge.push_back(0);
      group.push_back(static_cast<int>(out.edges.size()) - 1);
    }
    out.glue_groups.push_back(std::move(group));
  }
  out.finalize();
  return out;
}

void dijkstra(const PolygonMesh& mesh, std::span<const int> sources,
              std::vector<double>& dist, std::vector<int>* hops) {
  const int n = mesh.vertex_count();
  dist.assign(n, kInf);
  if (hops) hops->assign(n, 0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (int s : sources) {
    dist[s] = 0.0;
    pq.push({0.0, s});
  }
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (int k = mesh.adj_off[u]; k < mesh.adj_off[u + 1]; ++k) {
      const int v = mesh.adj_to[k];
      const double nd = d + mesh.adj_w[k];
      if (nd < dist[v]) {
        dist[v] = nd;
        if (hops) (*hops)[v] = (*hops)[u] + (mesh.adj_w[k] > 0.0 ? 1 : 0);
        pq.push({nd, v});
      }
    }
  }
}

namespace {

// Incremental multi-source update: dist becomes min(dist, d(s, .)).
void add_source(const PolygonMesh& mesh, int s, std::vector<double>& dist) {
  if (dist[s] <= 0.0) return;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[s] = 0.0;
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (int k = mesh.adj_off[u]; k < mesh.adj_off[u + 1]; ++k) {
      const int v = mesh.adj_to[k];
      const double nd = d + mesh.adj_w[k];
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
}

double max_ecc_over(const PolygonMesh& mesh, const std::vector<int>& sources) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = std::min<unsigned>(hw, 8);
  std::vector<double> local_max(nthreads, 0.0);
  auto work = [&](unsigned t) {
    std::vector<double> dist;
    double m = 0.0;
    for (std::size_t i = t; i < sources.size(); i += nthreads) {
      const int src = sources[i];
      dijkstra(mesh, std::span<const int>(&src, 1), dist);
      for (double d : dist)
        if (d < kInf && d > m) m = d;
    }
    local_max[t] = m;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  return *std::max_element(local_max.begin(), local_max.end());
}

} // namespace

DiameterEstimate estimate_diameter(const PolygonMesh& mesh, const MeshOptions& opts) {
  const int n = mesh.vertex_count();
  if (n == 0 || !mesh.connected())
    throw std::runtime_error("estimate_diameter: mesh is disconnected");
  const double h = mesh.resolution;

  DiameterEstimate est;
  est.slack = 2.0 * h;

  const int cap = opts.diameter_source_cap;
  std::vector<int> sources;
  if (cap == 0 || n <= cap) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), 0);
    est.cover = 0.0;
  } else {
    // Farthest-point source set down to covering radius <= h.
    std::vector<double> dist_to_set(n, kInf);
    sources.push_back(0);
    add_source(mesh, 0, dist_to_set);
    while (static_cast<int>(sources.size()) < std::max(cap, 8)) {
      const auto it = std::max_element(dist_to_set.begin(), dist_to_set.end());
      if (*it <= h) break;
      const int next = static_cast<int>(it - dist_to_set.begin());
      sources.push_back(next);
      add_source(mesh, next, dist_to_set);
    }
    est.cover = *std::max_element(dist_to_set.begin(), dist_to_set.end());
  }
  est.sources = static_cast<int>(sources.size());
  est.graph_max = max_ecc_over(mesh, sources);
  est.upper = est.graph_max + est.cover + est.slack;

  // Chordal lower bound between vertices sharing a chart.
  int ncopies = 0;
  for (const auto& v : mesh.vertices) ncopies = std::max(ncopies, v.copy + 1);
  std::vector<std::vector<int>> by_copy(ncopies);
  for (int i = 0; i < n; ++i) by_copy[mesh.vertices[i].copy].push_back(i);
  double best_pair = 1.0;
  for (auto& ids : by_copy) {
    const std::size_t cap_pairs = 2500;
    const std::size_t stride = std::max<std::size_t>(1, ids.size() / cap_pairs);
    std::vector<int> sub;
    for (std::size_t i = 0; i < ids.size(); i += stride) sub.push_back(ids[i]);
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j)
        best_pair = std::max(
            best_pair, minkowski(mesh.vertices[sub[i]].pos, mesh.vertices[sub[j]].pos));
  }
  est.lower = std::acosh(std::max(1.0, best_pair));
  return est;
}

PantsMesh pants_mesh(const pants::CuffTriple& cuffs, double h, const MeshOptions& opts) {
  const int cusps = cuffs.cusp_count();
  PantsMesh pm;
  pm.cusp_count = cusps;
  ConvexRegion region;
  std::vector<int> seam_tags;
  if (cusps == 0) {
    region = hexagon_region(cuffs.cuffs[0] / 2.0, cuffs.cuffs[1] / 2.0, cuffs.cuffs[2] / 2.0);
    seam_tags = {1, 3, 5};
    pm.cuff_sides = {{{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}, {{0, 4}, {1, 4}}};
  } else if (cusps == 1) {
    const auto geod = cuffs.geodesic_cuffs();
    region = one_cusp_region(geod[0], geod[1]);
    seam_tags = {kZ1, kX1, kY1};
    pm.cuff_sides = {{{0, kCuff1Half}, {1, kCuff1Half}}, {{0, kCuff2Half}, {1, kCuff2Half}}};
    pm.horocycle_sides = {{0, kHoro1}, {1, kHoro1}};
  } else if (cusps == 2) {
    const auto geod = cuffs.geodesic_cuffs();
    region = two_cusp_region(geod[0]);
    seam_tags = {kXRight, kZ2, kXLeft};
    pm.cuff_sides = {{{0, kCuffHalf}, {1, kCuffHalf}}};
    pm.horocycle_sides = {{0, kHoroRight}, {0, kHoroLeft}, {1, kHoroRight}, {1, kHoroLeft}};
  } else {
    throw std::domain_error("pants_mesh: the three-cusped pants is not supported");
  }
  const PolygonMesh rm = mesh_region(region, h, opts);
  ComplexBuilder cb;
  const int c0 = cb.add_copy(rm);
  const int c1 = cb.add_copy(rm);
  for (int t : seam_tags) {
    cb.glue(c0, t, c1, t, false);
    pm.seam_sides.push_back({0, t});
    pm.seam_sides.push_back({1, t});
  }
  pm.mesh = cb.build();
  return pm;
}

PolygonMesh double_along_cuff(const pants::CuffTriple& cuffs, int cuff_index, double h,
                              const MeshOptions& opts) {
  const int cusps = cuffs.cusp_count();
  ConvexRegion region;
  std::vector<int> seam_tags;
  int cuff_tag = -1;
  if (cusps == 0) {
    region = hexagon_region(cuffs.cuffs[0] / 2.0, cuffs.cuffs[1] / 2.0, cuffs.cuffs[2] / 2.0);
    seam_tags = {1, 3, 5};
    cuff_tag = 2 * cuff_index;
  } else if (cusps == 1) {
    const auto geod = cuffs.geodesic_cuffs();
    region = one_cusp_region(geod[0], geod[1]);
    seam_tags = {kZ1, kX1, kY1};
    cuff_tag = (cuff_index == 0) ? kCuff1Half : kCuff2Half;
  } else if (cusps == 2) {
    const auto geod = cuffs.geodesic_cuffs();
    region = two_cusp_region(geod[0]);
    seam_tags = {kXRight, kZ2, kXLeft};
    cuff_tag = kCuffHalf;
  } else {
    throw std::domain_error("double_along_cuff: the three-cusped pants is not supported");
  }
  if (cuff_tag < 0) throw std::domain_error("double_along_cuff: bad cuff index");

  const PolygonMesh rm = mesh_region(region, h, opts);
  ComplexBuilder cb;
  const int a0 = cb.add_copy(rm);
  const int a1 = cb.add_copy(rm);
  const int b0 = cb.add_copy(rm);
  const int b1 = cb.add_copy(rm);
  for (int t : seam_tags) {
    cb.glue(a0, t, a1, t, false);
    cb.glue(b0, t, b1, t, false);
  }
  cb.glue(a0, cuff_tag, b0, cuff_tag, false);
  cb.glue(a1, cuff_tag, b1, cuff_tag, false);
  return cb.build();
}

SquareWindowMesh square_window_mesh(Length b, int nx, int ny, double h,
                                    const MeshOptions& opts) {
  if (nx < 1 || ny < 1) throw std::domain_error("square_window_mesh: window must be nonempty");
  const PolygonMesh rm = mesh_region(pentagon_region(b), h, opts);
  ComplexBuilder cb;
  const int nsq = nx * ny;
  std::vector<std::array<int, 4>> pent(nsq);
  for (int sq = 0; sq < nsq; ++sq)
    for (int k = 0; k < 4; ++k) pent[sq][k] = cb.add_copy(rm);

  SquareWindowMesh out;
  out.nx = nx;
  out.ny = ny;
  out.spoke_groups.resize(nsq);
  for (int sq = 0; sq < nsq; ++sq)
    for (int k = 0; k < 4; ++k)
      out.spoke_groups[sq][k] =
          cb.glue(pent[sq][k], kSpokeA, pent[sq][(k + 1) % 4], kSpokeB, true);

  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const int a = iy * nx + ix;
      if (ix + 1 < nx) {
        const int bq = iy * nx + ix + 1;
        cb.glue(pent[a][3], kEdgeA, pent[bq][2], kEdgeB, true);
        cb.glue(pent[a][0], kEdgeB, pent[bq][1], kEdgeA, true);
      }
      if (iy + 1 < ny) {
        const int bq = (iy + 1) * nx + ix;
        cb.glue(pent[a][0], kEdgeA, pent[bq][3], kEdgeB, true);
        cb.glue(pent[a][1], kEdgeB, pent[bq][2], kEdgeA, true);
      }
    }

  out.mesh = cb.build();
  out.hole_samples.resize(nsq);
  for (int sq = 0; sq < nsq; ++sq)
    for (int k = 0; k < 4; ++k) {
      const auto& ids = out.mesh.samples(pent[sq][k], kHole);
      out.hole_samples[sq].insert(out.hole_samples[sq].end(), ids.begin(), ids.end());
    }
  return out;
}

SeparationEstimate boundary_separation(Length b, double h, const MeshOptions& opts) {
  MeshOptions sep = opts;
  sep.radius_floor = std::max(sep.radius_floor, 4.5);
  const SquareWindowMesh w = square_window_mesh(b, 2, 1, h, sep);
  std::vector<double> dist;
  std::vector<int> hops;
  dijkstra(w.mesh, w.hole_samples[0], dist, &hops);
  SeparationEstimate est;
  est.estimate = kInf;
  for (int id : w.hole_samples[1]) {
    if (dist[id] < est.estimate) {
      est.estimate = dist[id];
      est.hops = hops[id];
    }
  }
  est.certified_lower = std::max(0.0, est.estimate - est.hops * h);
  return est;
}

namespace {

double layered_loop(const PolygonMesh& mesh, const std::vector<char>& f1,
                    const std::vector<char>* f2, int max_seeds) {
  const int n = mesh.vertex_count();
  const int layers = f2 ? 4 : 2;
  const int target = f2 ? 3 : 1;
  std::vector<int> seeds;
  for (std::size_t e = 0; e < mesh.edges.size(); ++e)
    if (f1[e] || (f2 && (*f2)[e])) {
      seeds.push_back(mesh.edges[e][0]);
      seeds.push_back(mesh.edges[e][1]);
    }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  if (seeds.empty()) return kInf;
  const std::size_t stride = std::max<std::size_t>(1, seeds.size() / max_seeds);
  double best = kInf;
  std::vector<double> dist;
  using Item = std::pair<double, int>;
  for (std::size_t si = 0; si < seeds.size(); si += stride) {
    const int s = seeds[si];
    dist.assign(static_cast<std::size_t>(n) * layers, kInf);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[static_cast<std::size_t>(s) * layers] = 0.0;
    pq.push({0.0, s * layers});
    while (!pq.empty()) {
      auto [d, code] = pq.top();
      pq.pop();
      if (d > dist[code]) continue;
      const int u = code / layers;
      const int lay = code % layers;
      if (u == s && lay == target) break;
      if (d >= best) break;
      for (int k = mesh.adj_off[u]; k < mesh.adj_off[u + 1]; ++k) {
        const int v = mesh.adj_to[k];
        const int eid = mesh.adj_eid[k];
        int nlay = lay ^ (f1[eid] ? 1 : 0);
        if (f2) nlay ^= ((*f2)[eid] ? 2 : 0);
        const int ncode = v * layers + nlay;
        const double nd = d + mesh.adj_w[k];
        if (nd < dist[ncode]) {
          dist[ncode] = nd;
          pq.push({nd, ncode});
        }
      }
    }
    best = std::min(best, dist[static_cast<std::size_t>(s) * layers + target]);
  }
  return best;
}

} // namespace

double shortest_odd_loop(const PolygonMesh& mesh, const std::vector<char>& edge_flag,
                         int max_seeds) {
  return layered_loop(mesh, edge_flag, nullptr, max_seeds);
}

double shortest_odd_odd_loop(const PolygonMesh& mesh, const std::vector<char>& flag1,
                             const std::vector<char>& flag2, int max_seeds) {
  return layered_loop(mesh, flag1, &flag2, max_seeds);
}

void write_mesh_text(const PolygonMesh& mesh, std::ostream& os) {
  os << "# mesh h=" << mesh.resolution << " vertices=" << mesh.vertex_count()
     << " edges=" << mesh.edges.size() << "\n";
  for (int i = 0; i < mesh.vertex_count(); ++i) {
    const auto& v = mesh.vertices[i];
    os << "v " << i << " " << v.pos[0] << " " << v.pos[1] << " " << v.pos[2] << " "
       << v.copy << " " << v.tag << " " << v.param << "\n";
  }
  for (std::size_t e = 0; e < mesh.edges.size(); ++e)
    os << "e " << mesh.edges[e][0] << " " << mesh.edges[e][1] << " " << mesh.weights[e]
       << "\n";
}

} // namespace flute::hplane
