#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>

#include "sta/graph.hpp"

namespace sta {

/// n-th letter of the Fibonacci word a b a a b a b a a b a a b ...
/// (fixed point of a -> ab, b -> a); returns 0 for 'a', 1 for 'b'.
int fib_letter(std::int64_t n);

/// Tail of an eventually periodic point: rho repeated forever.
struct CycleTail {
  Path cycle;  // primitive after canonicalization; r(cycle) = s(cycle)
  friend bool operator==(const CycleTail&, const CycleTail&) = default;
  friend std::strong_ordering operator<=>(const CycleTail&, const CycleTail&) = default;
};

/// Aperiodic tail: the Fibonacci word routed over two distinct return cycles
/// at a common vertex.  (word_index, edge_pos) is the read position inside
/// the concatenation  C_{w_0} C_{w_1} C_{w_2} ...  where w is the Fibonacci
/// word and C_0 / C_1 are the two cycles.
struct FibTail {
  Path cycle_a;
  Path cycle_b;
  std::int64_t word_index = 0;
  int edge_pos = 0;

  const Path& cycle_at(std::int64_t i) const { return fib_letter(i) == 0 ? cycle_a : cycle_b; }
  int current_edge() const { return cycle_at(word_index).edge_at(edge_pos); }
  int anchor() const;  // range vertex of the current edge
  void advance();
  bool can_retreat() const { return word_index > 0 || edge_pos > 0; }
  void retreat();

  friend bool operator==(const FibTail&, const FibTail&) = default;
  friend std::strong_ordering operator<=>(const FibTail&, const FibTail&) = default;
};

/// A computable point of the infinite-path space: finite head followed by an
/// eventually periodic or Fibonacci-aperiodic tail.  Stored in canonical form,
/// so equality of points is structural equality.
class Point {
 public:
  Point() = default;
  /// Eventually periodic point head . cycle^infinity; canonicalizes.
  /// Throws NotACycle if cycle is not a nonempty cycle at s(head).
  Point(Path head, Path cycle);
  /// Aperiodic point head . (Fibonacci routing of cycle_a / cycle_b).
  Point(Path head, FibTail tail);

  const Graph* graph() const { return head_.graph(); }
  const Path& head() const { return head_; }
  bool eventually_periodic() const { return std::holds_alternative<CycleTail>(tail_); }
  const Path& cycle() const { return std::get<CycleTail>(tail_).cycle; }
  const FibTail& fib_tail() const { return std::get<FibTail>(tail_); }

  int range_vertex() const { return head_.range_vertex(); }
  /// i-th edge of the infinite path.
  int edge_at(std::int64_t i) const;
  /// The unique length-n initial path.
  Path prefix(int n) const;

  Point shift() const;
  Point shift(int k) const;
  /// p . x for a finite path p with s(p) = r(x).
  Point prepend(const Path& p) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

  std::string str() const;

 private:
  void canonicalize();
  Path head_;
  std::variant<CycleTail, FibTail> tail_;
};

/// Canonical eventually periodic point lambda . rho^infinity.
Point canonical_point(const Path& head, const Path& cycle);

/// An aperiodic point anchored at v: walks a connector to some vertex with two
/// distinct return cycles and routes the Fibonacci word over them.  Throws
/// DomainError if no such vertex is backward-reachable from v.
Point aperiodic_point_at(const Graph& g, int v, int max_cycle_length = 8);

/// Groupoid element (x, n, y) with witness lengths (k, l):
/// k - l = n and shift^k(x) = shift^l(y).  Identity is (x, n, y); the witness
/// is bookkeeping only.
class GroupoidElement {
 public:
  /// Throws DomainError unless the witness equation holds.
  GroupoidElement(Point x, std::int64_t n, Point y, int k, int l);

  /// The element (mu z, |mu|-|nu|, nu z) of Z(mu, nu) with tail z.
  static GroupoidElement from_pair(const Path& mu, const Path& nu, const Point& z);

  const Point& range_point() const { return x_; }
  const Point& source_point() const { return y_; }
  std::int64_t degree() const { return n_; }
  int witness_k() const { return k_; }
  int witness_l() const { return l_; }

  GroupoidElement inverse() const;
  /// Composition; requires source_point() == other.range_point().
  GroupoidElement compose(const GroupoidElement& other) const;

  bool is_unit() const { return n_ == 0 && x_ == y_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
    return a.x_ == b.x_ && a.n_ == b.n_ && a.y_ == b.y_;
  }
  friend std::strong_ordering operator<=>(const GroupoidElement& a, const GroupoidElement& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.y_ <=> b.y_;
  }

 private:
  Point x_;
  std::int64_t n_;
  Point y_;
  int k_, l_;
};

}  // namespace sta
