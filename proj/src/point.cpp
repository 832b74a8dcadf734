#include "sta/point.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sta/errors.hpp"

namespace sta {

int fib_letter(std::int64_t n) {
  // Word lengths follow Fibonacci numbers: |S_0| = 1 ("a"), |S_1| = 2 ("ab"),
  // S_{k+1} = S_k S_{k-1}.
  std::vector<std::int64_t> len{1, 2};
  while (len.back() <= n) len.push_back(len.back() + len[len.size() - 2]);
  size_t k = len.size() - 1;
  while (k >= 2) {
    if (n < len[k - 1]) {
      k -= 1;
    } else {
      n -= len[k - 1];
      k -= 2;
    }
  }
  if (k == 0) return 0;      // "a"
  return n == 0 ? 0 : 1;     // "ab"
}

int FibTail::anchor() const { return cycle_a.graph()->range(current_edge()); }

void FibTail::advance() {
  if (++edge_pos == cycle_at(word_index).length()) {
    ++word_index;
    edge_pos = 0;
  }
}

void FibTail::retreat() {
  if (edge_pos > 0) {
    --edge_pos;
  } else {
    --word_index;
    edge_pos = cycle_at(word_index).length() - 1;
  }
}

namespace {

Path primitive_root(const Path& cycle) {
  int n = cycle.length();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i)
      if (cycle.edge_at(i) != cycle.edge_at(i % d)) ok = false;
    if (ok && cycle.prefix(d).is_cycle()) return cycle.prefix(d);
  }
  return cycle;
}

// Moves the last edge of a cycle to the front.
Path rotate_backward(const Path& cycle) {
  std::vector<int> es;
  es.push_back(cycle.edge_at(cycle.length() - 1));
  for (int i = 0; i + 1 < cycle.length(); ++i) es.push_back(cycle.edge_at(i));
  return Path(cycle.graph(), std::move(es));
}

}  // namespace

Point::Point(Path head, Path cycle) : head_(std::move(head)) {
  if (!cycle.is_cycle()) throw NotACycle();
  if (head_.source_vertex() != cycle.range_vertex()) throw NotACycle();
  tail_ = CycleTail{std::move(cycle)};
  canonicalize();
}

Point::Point(Path head, FibTail tail) : head_(std::move(head)), tail_(std::move(tail)) {
  const auto& ft = std::get<FibTail>(tail_);
  if (!ft.cycle_a.is_cycle() || !ft.cycle_b.is_cycle() ||
      ft.cycle_a.range_vertex() != ft.cycle_b.range_vertex() || ft.cycle_a == ft.cycle_b)
    throw DomainError("aperiodic tail needs two distinct return cycles at one vertex");
  if (head_.source_vertex() != ft.anchor())
    throw NotComposable();
  canonicalize();
}

void Point::canonicalize() {
  if (auto* ct = std::get_if<CycleTail>(&tail_)) {
    ct->cycle = primitive_root(ct->cycle);
    while (!head_.empty() &&
           head_.edge_at(head_.length() - 1) == ct->cycle.edge_at(ct->cycle.length() - 1)) {
      ct->cycle = rotate_backward(ct->cycle);
      head_ = head_.prefix(head_.length() - 1);
    }
  } else {
    auto& ft = std::get<FibTail>(tail_);
    while (!head_.empty() && ft.can_retreat()) {
      FibTail back = ft;
      back.retreat();
      if (head_.edge_at(head_.length() - 1) != back.current_edge()) break;
      ft = back;
      head_ = head_.prefix(head_.length() - 1);
    }
  }
}

int Point::edge_at(std::int64_t i) const {
  if (i < head_.length()) return head_.edge_at(i);
  i -= head_.length();
  if (auto* ct = std::get_if<CycleTail>(&tail_))
    return ct->cycle.edge_at(static_cast<int>(i % ct->cycle.length()));
  FibTail ft = std::get<FibTail>(tail_);
  while (i--) ft.advance();
  return ft.current_edge();
}

Path Point::prefix(int n) const {
  if (n == 0) return Path(graph(), range_vertex());
  std::vector<int> es;
  es.reserve(n);
  for (int i = 0; i < n; ++i) es.push_back(edge_at(i));
  return Path(graph(), std::move(es));
}

Point Point::shift() const {
  if (!head_.empty()) {
    Point r = *this;
    r.head_ = head_.suffix(1);
    r.canonicalize();
    return r;
  }
  if (auto* ct = std::get_if<CycleTail>(&tail_)) {
    Path rho = ct->cycle;
    std::vector<int> es;
    for (int i = 1; i < rho.length(); ++i) es.push_back(rho.edge_at(i));
    es.push_back(rho.edge_at(0));
    Path rotated(rho.graph(), std::move(es));
    return Point(Path(rho.graph(), rotated.range_vertex()), rotated);
  }
  FibTail ft = std::get<FibTail>(tail_);
  ft.advance();
  return Point(Path(graph(), ft.anchor()), ft);
}

Point Point::shift(int k) const {
  Point p = *this;
  while (k--) p = p.shift();
  return p;
}

Point Point::prepend(const Path& p) const {
  if (p.source_vertex() != range_vertex()) throw NotComposable();
  if (auto* ct = std::get_if<CycleTail>(&tail_)) return Point(p.compose(head_), ct->cycle);
  return Point(p.compose(head_), std::get<FibTail>(tail_));
}

std::string Point::str() const {
  if (eventually_periodic()) return head_.str() + "(" + cycle().str() + ")^inf";
  const auto& ft = fib_tail();
  return head_.str() + ".fib(" + ft.cycle_a.str() + "," + ft.cycle_b.str() + ")@" +
         std::to_string(ft.word_index) + ":" + std::to_string(ft.edge_pos);
}

Point canonical_point(const Path& head, const Path& cycle) { return Point(head, cycle); }

Point aperiodic_point_at(const Graph& g, int v, int max_cycle_length) {
  // BFS backward (along in-edges) from v for a vertex with two distinct
  // return cycles; route the Fibonacci word over the first two found.
  std::set<int> seen{v};
  std::vector<Path> frontier{Path(&g, v)};
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& conn : frontier) {
      int u = conn.source_vertex();
      auto cyc = cycles_at(g, u, max_cycle_length);
      // Prefer a pair with distinct first edges: keeps block boundaries in the
      // routed edge stream decodable.
      for (size_t i = 0; i < cyc.size(); ++i)
        for (size_t j = i + 1; j < cyc.size(); ++j)
          if (cyc[i].edge_at(0) != cyc[j].edge_at(0))
            return Point(conn, FibTail{cyc[i], cyc[j]});
      for (int e : g.in_edges(u)) {
        int w = g.source(e);
        if (seen.insert(w).second) next.push_back(conn.append(e));
      }
    }
    frontier = std::move(next);
  }
  throw DomainError("no vertex with two distinct return cycles reachable from '" +
                    g.vertex_name(v) + "'");
}

GroupoidElement::GroupoidElement(Point x, std::int64_t n, Point y, int k, int l)
    : x_(std::move(x)), n_(n), y_(std::move(y)), k_(k), l_(l) {
  if (k_ < 0 || l_ < 0 || k_ - l_ != n_) throw DomainError("bad witness lengths");
  if (x_.shift(k_) != y_.shift(l_)) throw DomainError("witness tails disagree");
  while (k_ > 0 && l_ > 0 && x_.shift(k_ - 1) == y_.shift(l_ - 1)) --k_, --l_;
}

GroupoidElement GroupoidElement::from_pair(const Path& mu, const Path& nu, const Point& z) {
  return GroupoidElement(z.prepend(mu), mu.length() - nu.length(), z.prepend(nu),
                         mu.length(), nu.length());
}

GroupoidElement GroupoidElement::inverse() const {
  return GroupoidElement(y_, -n_, x_, l_, k_);
}

GroupoidElement GroupoidElement::compose(const GroupoidElement& other) const {
  if (y_ != other.x_) throw NotComposable();
  int m = std::max(l_, other.k_);
  return GroupoidElement(x_, n_ + other.n_, other.y_, k_ + (m - l_),
                         other.l_ + (m - other.k_));
}

}  // namespace sta
