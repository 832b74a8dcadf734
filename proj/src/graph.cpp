#include "sta/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sta/errors.hpp"

namespace sta {

Graph Graph::validate(
    const std::vector<std::string>& vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
  Graph g;
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second) throw DuplicateId(v);
    g.vertices_.push_back(v);
  }
  g.in_edges_.resize(g.vertices_.size());
  for (const auto& [id, r, s] : edges) {
    if (!seen.insert(id).second) throw DuplicateId(id);
    int ri = g.vertex_index(r), si = g.vertex_index(s);
    if (ri < 0) throw ParseError("unknown vertex '" + r + "'");
    if (si < 0) throw ParseError("unknown vertex '" + s + "'");
    g.in_edges_[ri].push_back(static_cast<int>(g.edges_.size()));
    g.edges_.push_back({id, ri, si});
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges_[v].empty()) throw NoSourcesViolation(g.vertices_[v]);
  return g;
}

Graph Graph::parse(const std::string& text) {
  std::vector<std::string> vs;
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "v") {
      std::string name;
      if (!(ls >> name))
        throw ParseError("line " + std::to_string(lineno) + ": expected vertex name");
      vs.push_back(name);
    } else if (kind == "e") {
      std::string name, r, s;
      if (!(ls >> name >> r >> s))
        throw ParseError("line " + std::to_string(lineno) + ": expected `e <name> <range> <source>`");
      es.emplace_back(name, r, s);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown item '" + kind + "'");
    }
  }
  return validate(vs, es);
}

std::string Graph::print() const {
  std::ostringstream out;
  for (const auto& v : vertices_) out << "v " << v << "\n";
  for (const auto& e : edges_)
    out << "e " << e.id << " " << vertices_[e.range] << " " << vertices_[e.source] << "\n";
  return out.str();
}

int Graph::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == name) return i;
  return -1;
}

int Graph::edge_index(const std::string& name) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].id == name) return i;
  return -1;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.range != y.range || x.source != y.source) return false;
  }
  return true;
}

Path::Path(const Graph* g, std::vector<int> edges) : graph_(g), edges_(std::move(edges)) {
  if (edges_.empty()) throw NotComposable();
  anchor_ = g->range(edges_.front());
  for (size_t i = 0; i + 1 < edges_.size(); ++i)
    if (g->source(edges_[i]) != g->range(edges_[i + 1])) throw NotComposable();
}

Path Path::compose(const Path& q) const {
  if (source_vertex() != q.range_vertex()) throw NotComposable();
  if (q.empty()) return *this;
  Path r;
  r.graph_ = graph_ ? graph_ : q.graph_;
  r.anchor_ = empty() ? q.anchor_ : anchor_;
  r.edges_ = edges_;
  r.edges_.insert(r.edges_.end(), q.edges_.begin(), q.edges_.end());
  return r;
}

Path Path::suffix(int i) const {
  if (i == 0) return *this;
  Path r;
  r.graph_ = graph_;
  if (i >= length()) {
    r.anchor_ = source_vertex();
    return r;
  }
  r.edges_.assign(edges_.begin() + i, edges_.end());
  r.anchor_ = graph_->range(r.edges_.front());
  return r;
}

Path Path::prefix(int n) const {
  Path r;
  r.graph_ = graph_;
  r.anchor_ = anchor_;
  r.edges_.assign(edges_.begin(), edges_.begin() + std::min<int>(n, length()));
  return r;
}

Path Path::append(int e) const {
  if (graph_->range(e) != source_vertex()) throw NotComposable();
  Path r = *this;
  r.edges_.push_back(e);
  return r;
}

bool Path::is_prefix_of(const Path& longer) const {
  if (range_vertex() != longer.range_vertex()) return false;
  if (length() > longer.length()) return false;
  return std::equal(edges_.begin(), edges_.end(), longer.edges_.begin());
}

std::string Path::str() const {
  if (empty()) return graph_->vertex_name(anchor_);
  std::string s;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += '.';
    s += graph_->edge(edges_[i]).id;
  }
  return s;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (a.edges_.empty() && b.edges_.empty()) return a.anchor_ <=> b.anchor_;
  if (a.edges_.empty()) return std::strong_ordering::less;
  if (b.edges_.empty()) return std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(),
                                               b.edges_.begin(), b.edges_.end());
}

Path compose_paths(const Path& p, const Path& q) { return p.compose(q); }

std::vector<Path> paths_from(const Graph& g, int v, int length) {
  std::vector<Path> out;
  Path start(&g, v);
  if (length == 0) {
    out.push_back(start);
    return out;
  }
  std::vector<Path> frontier{start};
  for (int step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int e : g.in_edges(p.source_vertex())) next.push_back(p.append(e));
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<Path> all_paths(const Graph& g, int length) {
  std::vector<Path> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto ps = paths_from(g, v, length);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  if (length > 0) {
    // Nonempty paths are anchored by their first edge; dedupe across anchors
    // is unnecessary (each path found once, from its own range vertex).
  }
  return out;
}

std::vector<Path> all_paths_up_to(const Graph& g, int max_length) {
  std::vector<Path> out;
  for (int n = 0; n <= max_length; ++n) {
    auto ps = all_paths(g, n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Path> cycles_at(const Graph& g, int v, int max_length) {
  std::vector<Path> out;
  for (int n = 1; n <= max_length; ++n)
    for (const auto& p : paths_from(g, v, n))
      if (p.source_vertex() == v) out.push_back(p);
  return out;
}

std::pair<Path, Path> reach_cycle(const Graph& g, int v) {
  // Walk along first in-edges until a vertex repeats.
  std::vector<int> order;      // visited vertices
  std::map<int, int> pos;      // vertex -> index in order
  std::vector<int> walk;       // edges taken
  int cur = v;
  while (!pos.count(cur)) {
    pos[cur] = static_cast<int>(order.size());
    order.push_back(cur);
    int e = g.in_edges(cur).front();
    walk.push_back(e);
    cur = g.source(e);
  }
  int start = pos[cur];
  Path connector = start == 0
                       ? Path(&g, v)
                       : Path(&g, std::vector<int>(walk.begin(), walk.begin() + start));
  Path cycle(&g, std::vector<int>(walk.begin() + start, walk.end()));
  return {connector, cycle};
}

}  // namespace sta
