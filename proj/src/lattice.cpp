#include "toricdiag/lattice.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace toricdiag {

std::array<Vertex, 2> endpoints(Edge e) {
  if (e.orientation == Orientation::Horizontal) {
    return {e.base, Vertex{e.base.x + 1, e.base.y}};
  }
  return {e.base, Vertex{e.base.x, e.base.y + 1}};
}

std::array<Face, 2> side_faces(Edge e) {
  if (e.orientation == Orientation::Horizontal) {
    return {Face{{e.base.x, e.base.y - 1}}, Face{{e.base.x, e.base.y}}};
  }
  return {Face{{e.base.x - 1, e.base.y}}, Face{{e.base.x, e.base.y}}};
}

Vertex Site::as_vertex() const {
  if (kind_ != Kind::Vertex) throw std::logic_error("Site: not a vertex");
  return at_;
}

Face Site::as_face() const {
  if (kind_ != Kind::Face) throw std::logic_error("Site: not a face");
  return Face{at_};
}

std::array<Edge, 4> star_edges(Vertex v) {
  return {horizontal_edge(v.x - 1, v.y), horizontal_edge(v.x, v.y),
          vertical_edge(v.x, v.y - 1), vertical_edge(v.x, v.y)};
}

std::array<Edge, 4> face_edges(Face f) {
  return {horizontal_edge(f.corner.x, f.corner.y),
          horizontal_edge(f.corner.x, f.corner.y + 1),
          vertical_edge(f.corner.x, f.corner.y),
          vertical_edge(f.corner.x + 1, f.corner.y)};
}

std::array<Edge, 4> site_edges(Site w) {
  return w.is_vertex() ? star_edges(w.as_vertex()) : face_edges(w.as_face());
}

Patch::Patch(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Patch::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Patch::subset_of(const Patch& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

Patch Patch::united(const Patch& other) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return Patch(std::move(all));
}

std::vector<Vertex> Patch::interior_vertices() const {
  std::set<Vertex> candidates;
  for (const Edge& e : edges_) {
    for (const Vertex& v : endpoints(e)) candidates.insert(v);
  }
  std::vector<Vertex> interior;
  for (const Vertex& v : candidates) {
    bool all_in = true;
    for (const Edge& e : star_edges(v)) {
      if (!contains(e)) {
        all_in = false;
        break;
      }
    }
    if (all_in) interior.push_back(v);
  }
  return interior;
}

std::vector<Face> Patch::interior_faces() const {
  std::set<Face> candidates;
  for (const Edge& e : edges_) {
    for (const Face& f : side_faces(e)) candidates.insert(f);
  }
  std::vector<Face> interior;
  for (const Face& f : candidates) {
    bool all_in = true;
    for (const Edge& e : face_edges(f)) {
      if (!contains(e)) {
        all_in = false;
        break;
      }
    }
    if (all_in) interior.push_back(f);
  }
  return interior;
}

std::vector<Site> Patch::interior_sites() const {
  std::vector<Site> sites;
  for (const Vertex& v : interior_vertices()) sites.push_back(Site::vertex(v));
  for (const Face& f : interior_faces()) sites.push_back(Site::face(f));
  std::sort(sites.begin(), sites.end());
  return sites;
}

namespace {

std::array<Site, 2> path_nodes_of(PathKind kind, Edge e) {
  if (kind == PathKind::Direct) {
    auto vs = endpoints(e);
    return {Site::vertex(vs[0]), Site::vertex(vs[1])};
  }
  auto fs = side_faces(e);
  return {Site::face(fs[0]), Site::face(fs[1])};
}

std::optional<Site> shared_node(PathKind kind, Edge a, Edge b) {
  auto na = path_nodes_of(kind, a);
  auto nb = path_nodes_of(kind, b);
  for (const Site& s : na) {
    if (s == nb[0] || s == nb[1]) return s;
  }
  return std::nullopt;
}

Site other_node(PathKind kind, Edge e, Site s) {
  auto ns = path_nodes_of(kind, e);
  return ns[0] == s ? ns[1] : ns[0];
}

}  // namespace

LatticePath::LatticePath(PathKind kind, std::vector<Edge> edges)
    : kind_(kind), edges_(std::move(edges)) {
  if (edges_.empty()) throw std::invalid_argument("LatticePath: empty edge list");
  {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("LatticePath: repeated edge");
    }
  }
  if (edges_.size() == 1) {
    auto ns = path_nodes_of(kind_, edges_[0]);
    nodes_ = {ns[0], ns[1]};
  } else {
    auto s = shared_node(kind_, edges_[0], edges_[1]);
    if (!s) throw std::invalid_argument("LatticePath: disconnected edges");
    nodes_.push_back(other_node(kind_, edges_[0], *s));
    nodes_.push_back(*s);
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      const Site& prev = nodes_.back();
      auto ns = path_nodes_of(kind_, edges_[i]);
      if (ns[0] != prev && ns[1] != prev) {
        throw std::invalid_argument("LatticePath: disconnected edges");
      }
      nodes_.push_back(other_node(kind_, edges_[i], prev));
    }
  }
  closed_ = nodes_.size() > 2 && nodes_.front() == nodes_.back();
  std::vector<Site> inner(nodes_.begin(), closed_ ? nodes_.end() - 1 : nodes_.end());
  std::sort(inner.begin(), inner.end());
  if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) {
    throw std::invalid_argument("LatticePath: self-intersecting path");
  }
}

std::vector<Site> LatticePath::path_boundary() const {
  if (closed_) return {};
  return {nodes_.front(), nodes_.back()};
}

Patch box_patch(Vertex center, int radius) {
  if (radius < 1) throw std::invalid_argument("box_patch: radius must be >= 1");
  std::vector<Edge> edges;
  for (int x = center.x - radius; x <= center.x + radius; ++x) {
    for (int y = center.y - radius; y <= center.y + radius; ++y) {
      if (x < center.x + radius) edges.push_back(horizontal_edge(x, y));
      if (y < center.y + radius) edges.push_back(vertical_edge(x, y));
    }
  }
  return Patch(std::move(edges));
}

std::optional<BoxSpec> box_spec_of(const Patch& p) {
  if (p.empty()) return std::nullopt;
  int min_x = std::numeric_limits<int>::max(), max_x = std::numeric_limits<int>::min();
  int min_y = min_x, max_y = max_x;
  for (const Edge& e : p.edges()) {
    for (const Vertex& v : endpoints(e)) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  }
  int dx = max_x - min_x, dy = max_y - min_y;
  if (dx != dy || dx == 0 || dx % 2 != 0) return std::nullopt;
  BoxSpec spec{Vertex{min_x + dx / 2, min_y + dy / 2}, dx / 2};
  if (p == box_patch(spec.center, spec.radius)) return spec;
  return std::nullopt;
}

LatticePath boundary_dual_path(const Patch& box) {
  auto spec = box_spec_of(box);
  if (!spec) throw std::invalid_argument("boundary_dual_path: patch is not a box");
  const int n = spec->radius;
  const Vertex c = spec->center;
  std::vector<Edge> crossed;
  crossed.reserve(static_cast<std::size_t>(8 * n + 4));
  for (int x = c.x - n; x <= c.x + n; ++x) crossed.push_back(vertical_edge(x, c.y - n - 1));
  for (int y = c.y - n; y <= c.y + n; ++y) crossed.push_back(horizontal_edge(c.x + n, y));
  for (int x = c.x + n; x >= c.x - n; --x) crossed.push_back(vertical_edge(x, c.y + n));
  for (int y = c.y + n; y >= c.y - n; --y) crossed.push_back(horizontal_edge(c.x - n - 1, y));
  return LatticePath(PathKind::Dual, std::move(crossed));
}

Patch closure_patch(const Patch& box) {
  LatticePath ring = boundary_dual_path(box);  // rejects non-box patches
  return box.united(Patch(ring.edges()));
}

LatticePath straight_path(Site w, int n) {
  if (n < 1) throw std::invalid_argument("straight_path: length must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  if (w.is_vertex()) {
    Vertex v = w.as_vertex();
    for (int k = 0; k < n; ++k) edges.push_back(horizontal_edge(v.x + k, v.y));
    return LatticePath(PathKind::Direct, std::move(edges));
  }
  Face f = w.as_face();
  for (int k = 1; k <= n; ++k) edges.push_back(vertical_edge(f.corner.x + k, f.corner.y));
  return LatticePath(PathKind::Dual, std::move(edges));
}

namespace {

void horizontal_leg(std::vector<Edge>& out, int x0, int x1, int y) {
  if (x1 > x0) {
    for (int x = x0; x < x1; ++x) out.push_back(horizontal_edge(x, y));
  } else {
    for (int x = x0 - 1; x >= x1; --x) out.push_back(horizontal_edge(x, y));
  }
}

void vertical_leg(std::vector<Edge>& out, int x, int y0, int y1) {
  if (y1 > y0) {
    for (int y = y0; y < y1; ++y) out.push_back(vertical_edge(x, y));
  } else {
    for (int y = y0 - 1; y >= y1; --y) out.push_back(vertical_edge(x, y));
  }
}

void dual_horizontal_leg(std::vector<Edge>& out, int x0, int x1, int y) {
  if (x1 > x0) {
    for (int x = x0; x < x1; ++x) out.push_back(vertical_edge(x + 1, y));
  } else {
    for (int x = x0; x > x1; --x) out.push_back(vertical_edge(x, y));
  }
}

void dual_vertical_leg(std::vector<Edge>& out, int x, int y0, int y1) {
  if (y1 > y0) {
    for (int y = y0; y < y1; ++y) out.push_back(horizontal_edge(x, y + 1));
  } else {
    for (int y = y0; y > y1; --y) out.push_back(horizontal_edge(x, y));
  }
}

}  // namespace

LatticePath l_path(Vertex a, Vertex b, bool horizontal_first) {
  if (a == b) throw std::invalid_argument("l_path: coincident endpoints");
  std::vector<Edge> edges;
  if (horizontal_first) {
    horizontal_leg(edges, a.x, b.x, a.y);
    vertical_leg(edges, b.x, a.y, b.y);
  } else {
    vertical_leg(edges, a.x, a.y, b.y);
    horizontal_leg(edges, a.x, b.x, b.y);
  }
  return LatticePath(PathKind::Direct, std::move(edges));
}

LatticePath dual_l_path(Face a, Face b, bool horizontal_first) {
  if (a == b) throw std::invalid_argument("dual_l_path: coincident endpoints");
  std::vector<Edge> edges;
  if (horizontal_first) {
    dual_horizontal_leg(edges, a.corner.x, b.corner.x, a.corner.y);
    dual_vertical_leg(edges, b.corner.x, a.corner.y, b.corner.y);
  } else {
    dual_vertical_leg(edges, a.corner.x, a.corner.y, b.corner.y);
    dual_horizontal_leg(edges, a.corner.x, b.corner.x, b.corner.y);
  }
  return LatticePath(PathKind::Dual, std::move(edges));
}

}  // namespace toricdiag
