#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace toricdiag {

// Geometry of the square lattice and its dual, drawn in the same plane.
// Conventions:
//   - a horizontal edge based at (x, y) joins (x, y)-(x+1, y);
//   - a vertical edge based at (x, y) joins (x, y)-(x, y+1);
//   - a face is the unit square whose lower-left corner is its base vertex;
//   - dual vertices are faces, and a dual step between adjacent faces crosses
//     exactly one direct edge.
// Coordinates are unbounded signed integers; patches carry their own extent.

struct Vertex {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Orientation : std::uint8_t { Horizontal, Vertical };

struct Edge {
  Vertex base;
  Orientation orientation = Orientation::Horizontal;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Face {
  Vertex corner;
  friend auto operator<=>(const Face&, const Face&) = default;
};

inline Edge horizontal_edge(int x, int y) { return Edge{{x, y}, Orientation::Horizontal}; }
inline Edge vertical_edge(int x, int y) { return Edge{{x, y}, Orientation::Vertical}; }

std::array<Vertex, 2> endpoints(Edge e);
// The two faces having e on their boundary.
std::array<Face, 2> side_faces(Edge e);

// Tagged union over Vertex | Face; the two namespaces stay disjoint.
class Site {
 public:
  enum class Kind : std::uint8_t { Vertex, Face };

  static Site vertex(Vertex v) { return Site(Kind::Vertex, v); }
  static Site face(Face f) { return Site(Kind::Face, f.corner); }

  Kind kind() const { return kind_; }
  bool is_vertex() const { return kind_ == Kind::Vertex; }
  bool is_face() const { return kind_ == Kind::Face; }
  Vertex as_vertex() const;
  Face as_face() const;
  Vertex coordinates() const { return at_; }

  friend auto operator<=>(const Site&, const Site&) = default;

 private:
  Site(Kind k, Vertex at) : kind_(k), at_(at) {}
  Kind kind_;
  Vertex at_;
};

// The 4 edges incident to v.
std::array<Edge, 4> star_edges(Vertex v);
// The 4 boundary edges of f.
std::array<Edge, 4> face_edges(Face f);
// star_edges or face_edges according to the site tag.
std::array<Edge, 4> site_edges(Site w);

// A finite edge set. Interior sites are those whose 4 incident edges all lie
// in the patch.
class Patch {
 public:
  Patch() = default;
  explicit Patch(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;
  bool subset_of(const Patch& other) const;
  Patch united(const Patch& other) const;

  std::vector<Vertex> interior_vertices() const;
  std::vector<Face> interior_faces() const;
  std::vector<Site> interior_sites() const;

  friend bool operator==(const Patch&, const Patch&) = default;

 private:
  std::vector<Edge> edges_;  // sorted, distinct
};

enum class PathKind : std::uint8_t { Direct, Dual };

// A finite non-self-intersecting path. For a direct path the stored edges are
// the path edges and consecutive edges share exactly one vertex; for a dual
// path the stored edges are the direct edges crossed, and consecutive crossed
// edges share exactly one face. A path is closed when its node walk returns
// to its start; closedness is computed, not declared.
class LatticePath {
 public:
  LatticePath(PathKind kind, std::vector<Edge> edges);

  PathKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool closed() const { return closed_; }
  // The node walk (vertices for direct, faces for dual), length + 1 entries,
  // first == last when closed.
  const std::vector<Site>& nodes() const { return nodes_; }
  // The boundary of the path: empty when closed, otherwise its two end sites.
  std::vector<Site> path_boundary() const;

 private:
  PathKind kind_;
  std::vector<Edge> edges_;
  std::vector<Site> nodes_;
  bool closed_ = false;
};

struct BoxSpec {
  Vertex center;
  int radius = 0;
  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;
};

// All edges with both endpoints in {center ± radius}^2. radius >= 1.
Patch box_patch(Vertex center, int radius);
// Recognizes patches that are exactly a box.
std::optional<BoxSpec> box_spec_of(const Patch& p);
// The closed dual path surrounding a box, counterclockwise from the
// lower-left ring face. Crosses exactly the edges sticking out of the box.
LatticePath boundary_dual_path(const Patch& box);
// box plus every edge crossed by its surrounding dual path.
Patch closure_patch(const Patch& box);

// First n edges of the straight horizontal path starting at w and moving
// right: direct edges for a vertex start, crossed edges of the dual row for
// a face start.
LatticePath straight_path(Site w, int n);

// Deterministic L-shaped routings used for excitation pairing and boundary
// solving. a != b.
LatticePath l_path(Vertex a, Vertex b, bool horizontal_first);
LatticePath dual_l_path(Face a, Face b, bool horizontal_first);

}  // namespace toricdiag
