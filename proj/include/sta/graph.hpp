#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sta {

/// Finite directed graph.  Edges point from source to range; an infinite path
/// moves from a vertex along an edge it *receives* (r(e) = current vertex) to
/// the edge's source.  Every vertex must receive at least one edge.
class Graph {
 public:
  struct Edge {
    std::string id;
    int range;
    int source;
  };

  /// Builds and validates.  Throws NoSourcesViolation / DuplicateId.
  static Graph validate(const std::vector<std::string>& vertices,
                        const std::vector<std::tuple<std::string, std::string, std::string>>&
                            edges /* (id, range, source) */);

  /// Text format: `v <name>` / `e <name> <range> <source>`, '#' comments.
  static Graph parse(const std::string& text);
  std::string print() const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  int range(int e) const { return edges_[e].range; }
  int source(int e) const { return edges_[e].source; }

  /// Edges e with r(e) = v, in insertion order.
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }

  int vertex_index(const std::string& name) const;  // -1 if absent
  int edge_index(const std::string& name) const;    // -1 if absent

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> in_edges_;
};

/// Finite composable edge word e1...en with s(e_i) = r(e_{i+1}).  The anchor
/// is the range vertex; an empty path is a vertex.
class Path {
 public:
  Path() : graph_(nullptr), anchor_(-1) {}
  /// Empty path at a vertex.
  Path(const Graph* g, int vertex) : graph_(g), anchor_(vertex) {}
  /// Nonempty path; throws NotComposable if the chain is broken.
  Path(const Graph* g, std::vector<int> edges);

  const Graph* graph() const { return graph_; }
  int length() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  int range_vertex() const { return anchor_; }
  int source_vertex() const {
    return edges_.empty() ? anchor_ : graph_->source(edges_.back());
  }
  const std::vector<int>& edges() const { return edges_; }
  int edge_at(int i) const { return edges_[i]; }

  /// Concatenation; requires s(*this) = r(q).
  Path compose(const Path& q) const;

  /// Suffix starting at edge index i (drop the first i edges).
  Path suffix(int i) const;
  /// First n edges.
  Path prefix(int n) const;
  /// Appends a single edge e with r(e) = s(*this).
  Path append(int e) const;

  bool is_prefix_of(const Path& longer) const;
  bool is_cycle() const { return length() >= 1 && range_vertex() == source_vertex(); }

  std::string str() const;  // '.'-separated edge names; vertex name if empty

  friend bool operator==(const Path& a, const Path& b) {
    return a.anchor_ == b.anchor_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  const Graph* graph_;
  int anchor_;  // range vertex
  std::vector<int> edges_;
};

Path compose_paths(const Path& p, const Path& q);

/// All paths of the given length anchored (by range) at v.
std::vector<Path> paths_from(const Graph& g, int v, int length);
/// All paths of exactly the given length, over all anchors.
std::vector<Path> all_paths(const Graph& g, int length);
/// All paths of length <= max_length, over all anchors.
std::vector<Path> all_paths_up_to(const Graph& g, int max_length);

/// All cycles (r = s) of length in [1, max_length] anchored at v.
std::vector<Path> cycles_at(const Graph& g, int v, int max_length);

/// Some cycle reachable from v along in-edges, returned as (connector, cycle)
/// with r(connector) = v and s(connector) = r(cycle).  Always exists in a
/// finite no-sources graph.
std::pair<Path, Path> reach_cycle(const Graph& g, int v);

}  // namespace sta
