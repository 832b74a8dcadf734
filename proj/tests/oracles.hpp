#pragma once

// Independent test oracles: pointwise definitions of the operations the
// library computes symbolically, plus deterministic generators.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sta/algebra.hpp"
#include "sta/errors.hpp"

namespace sta::testing {

// All canonical eventually periodic points with head length <= max_head and
// primitive cycle length <= max_cycle.
inline std::vector<Point> all_points(const Graph& g, int max_head, int max_cycle) {
  std::set<Point> out;
  for (const auto& head : all_paths_up_to(g, max_head))
    for (const auto& cycle : cycles_at(g, head.source_vertex(), max_cycle))
      out.insert(Point(head, cycle));
  return {out.begin(), out.end()};
}

// All groupoid elements (x, n, y) over the given points with |n| <= max_deg
// and a tail-matching witness within max_witness.
inline std::vector<GroupoidElement> all_elements(const std::vector<Point>& points, int max_deg,
                                                 int max_witness) {
  std::vector<std::vector<Point>> shifts(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    shifts[i].push_back(points[i]);
    for (int k = 1; k <= max_witness; ++k) shifts[i].push_back(shifts[i].back().shift());
  }
  std::vector<GroupoidElement> out;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j)
      for (int n = -max_deg; n <= max_deg; ++n)
        for (int k = std::max(n, 0); k <= max_witness; ++k) {
          int l = k - n;
          if (l > max_witness) continue;
          if (shifts[i][k] == shifts[j][l]) {
            out.emplace_back(points[i], n, points[j], k, l);
            break;
          }
        }
  return out;
}

// A separating family for unions of basics with path length <= max_len: one
// element (mu z, |mu|-|nu|, nu z) per path pair with common source, with a
// fixed eventually periodic tail z per vertex.
inline std::vector<GroupoidElement> separating_elements(const Graph& g, int max_len) {
  std::vector<Point> tail(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [conn, cyc] = reach_cycle(g, v);
    tail[v] = Point(conn, cyc);
  }
  std::vector<GroupoidElement> out;
  auto paths = all_paths_up_to(g, max_len);
  for (const auto& mu : paths)
    for (const auto& nu : paths)
      if (mu.source_vertex() == nu.source_vertex())
        out.push_back(GroupoidElement::from_pair(mu, nu, tail[mu.source_vertex()]));
  return out;
}

// Membership in a single basic, decided from the definition of Z(mu,nu): the
// element factors as (mu z, |mu|-|nu|, nu z).
inline bool member_oracle(const GroupoidElement& e, const BasicBisection& b) {
  int m = b.mu().length(), n = b.nu().length();
  if (e.degree() != m - n) return false;
  if (!(e.range_point().prefix(m) == b.mu())) return false;
  if (!(e.source_point().prefix(n) == b.nu())) return false;
  return e.range_point().shift(m) == e.source_point().shift(n);
}

// Pointwise convolution (f*g)(gamma) = sum_{r(alpha)=r(gamma)}
// f(alpha) g(alpha^-1 gamma); one candidate alpha per key of f.
inline GaussianRational conv_oracle(const AlgebraElement& f, const AlgebraElement& g,
                                    const GroupoidElement& gamma) {
  GaussianRational total;
  const Point& x = gamma.range_point();
  std::set<GroupoidElement> seen;
  for (const auto& [key, coeff] : f.terms()) {
    const Path& mu = key.mu();
    if (!(x.prefix(mu.length()) == mu)) continue;
    GroupoidElement alpha = GroupoidElement::from_pair(mu, key.nu(), x.shift(mu.length()));
    if (!seen.insert(alpha).second) continue;
    total += eval(f, alpha) * eval(g, alpha.inverse().compose(gamma));
  }
  return total;
}

// All no-sources graphs with <= max_v vertices and <= max_e edges, edges as
// unordered multisets of (range, source) pairs.  The returned reference is
// stable so points and paths may keep graph pointers into it.
inline const std::vector<Graph>& all_small_graphs(int max_v, int max_e) {
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  auto [cit, fresh] = cache.try_emplace({max_v, max_e});
  if (!fresh) return cit->second;
  std::vector<Graph>& out = cit->second;
  for (int nv = 1; nv <= max_v; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < nv; ++r)
      for (int s = 0; s < nv; ++s) slots.emplace_back(r, s);
    // Non-decreasing slot sequences of each length = edge multisets.
    std::vector<std::vector<int>> picks{{}};
    for (int len = 1; len <= max_e; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& p : picks)
        for (int i = p.empty() ? 0 : p.back(); i < static_cast<int>(slots.size()); ++i) {
          next.push_back(p);
          next.back().push_back(i);
        }
      for (const auto& p : next) {
        std::vector<std::string> vs;
        for (int v = 0; v < nv; ++v) vs.push_back("v" + std::to_string(v));
        std::vector<std::tuple<std::string, std::string, std::string>> es;
        for (size_t i = 0; i < p.size(); ++i)
          es.emplace_back("e" + std::to_string(i), vs[slots[p[i]].first], vs[slots[p[i]].second]);
        try {
          out.push_back(Graph::validate(vs, es));
        } catch (const NoSourcesViolation&) {
        }
      }
      picks = std::move(next);
    }
  }
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int geti(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  GaussianRational coeff() {
    Rational re(geti(-3, 3), geti(1, 3));
    if (geti(0, 2) == 0) return {re, Rational(geti(-2, 2), geti(1, 2))};
    return GaussianRational(re);
  }

  Path path(const Graph& g, int max_len) {
    const auto& pool = paths_cache(g, max_len);
    return pool[geti(0, static_cast<int>(pool.size()) - 1)];
  }

  BasicBisection basic(const Graph& g, int max_len) {
    Path mu = path(g, max_len);
    std::vector<Path> nus;
    for (const auto& p : paths_cache(g, max_len))
      if (p.source_vertex() == mu.source_vertex()) nus.push_back(p);
    return BasicBisection(mu, nus[geti(0, static_cast<int>(nus.size()) - 1)]);
  }

  AlgebraElement element(const Graph& g, int keys, int max_len) {
    std::vector<Term> raw;
    for (int i = 0; i < keys; ++i) raw.emplace_back(basic(g, max_len), coeff());
    return normalize(raw);
  }

  AlgebraElement nonzero_element(const Graph& g, int keys, int max_len) {
    for (;;) {
      AlgebraElement f = element(g, keys, max_len);
      if (!f.is_zero()) return f;
    }
  }

 private:
  const std::vector<Path>& paths_cache(const Graph& g, int max_len) {
    if (cache_graph_ != &g || cache_len_ != max_len) {
      cache_ = all_paths_up_to(g, max_len);
      cache_graph_ = &g;
      cache_len_ = max_len;
    }
    return cache_;
  }
  const Graph* cache_graph_ = nullptr;
  int cache_len_ = -1;
  std::vector<Path> cache_;
};

inline Graph rose(int petals) {
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  for (int i = 0; i < petals; ++i) es.emplace_back(std::string(1, 'a' + i), "v", "v");
  return Graph::validate({"v"}, es);
}

inline Graph parse_file_graph(const std::string& text) { return Graph::parse(text); }

}  // namespace sta::testing
