#include "sta/uniqueness.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "sta/errors.hpp"

namespace sta {

std::string IsotropyReport::str() const {
  if (generator == 0) return "trivial";
  return std::to_string(generator) + "Z";
}

IsotropyReport isotropy_group(const Point& u) {
  IsotropyReport r;
  r.u = u;
  if (u.eventually_periodic()) r.generator = u.cycle().length();
  return r;
}

bool condition_L(const Graph& g) {
  // A cycle without an entrance lives entirely on vertices of in-degree one,
  // where following the unique incoming edge is a partial function on
  // vertices; Condition (L) fails exactly when that function has a cycle.
  int n = g.vertex_count();
  std::vector<int> next(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.in_edges(v).size() == 1) next[v] = g.edge(g.in_edges(v)[0]).source;
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
  for (int v = 0; v < n; ++v) {
    int w = v;
    std::vector<int> stack;
    while (w != -1 && state[w] == 0) {
      state[w] = 1;
      stack.push_back(w);
      w = next[w];
    }
    if (w != -1 && state[w] == 1) return false;
    for (int s : stack) state[s] = 2;
  }
  return true;
}

namespace {

// All coefficients equal? Returns the common value.
std::optional<GaussianRational> constant_coefficient(const AlgebraElement& f) {
  std::optional<GaussianRational> c;
  for (const auto& [b, a] : f.terms()) {
    if (!c)
      c = a;
    else if (!(*c == a))
      return std::nullopt;
  }
  return c;
}

AlgebraElement window(const CylSet& x0, const AlgebraElement& f, const CylSet& y0) {
  return mul(indicator(x0), mul(f, indicator(y0)));
}

bool star_identity(const GaussianRational& c, const CylSet& b, const CylSet& k) {
  AlgebraElement cb = scale(c, indicator(b));
  return mul(star(cb), cb) == scale(GaussianRational(c.abs_sq()), indicator(k));
}

// Shortest path with range `from` and source `to`, or nullopt.
std::optional<Path> connect(const Graph& g, int from, int to) {
  std::deque<Path> frontier{Path(&g, from)};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[from] = true;
  while (!frontier.empty()) {
    Path p = frontier.front();
    frontier.pop_front();
    if (p.source_vertex() == to) return p;
    for (int e : g.in_edges(p.source_vertex())) {
      int w = g.edge(e).source;
      if (seen[w]) continue;
      seen[w] = true;
      frontier.push_back(p.append(e));
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate graded_certificate(const AlgebraElement& g) {
  if (g.is_zero()) throw ZeroElement();
  auto ds = degrees(g);
  int k = ds[0];
  for (int d : ds)
    if (std::abs(d) < std::abs(k) || (std::abs(d) == std::abs(k) && d > k)) k = d;
  AlgebraElement gk = homogeneous_component(g, k);
  AlgebraElement f = k != 0 ? mul(star(gk), gk) : gk;

  // f is nonzero of degree zero (for k != 0 by the positivity of g_k* g_k on
  // the diagonal).  A key of maximal path length meets no other key under
  // windowing, so the certificate needs no further refinement.
  BasicBisection key;
  GaussianRational coeff;
  int best = -1;
  for (const auto& [b, a] : f.terms())
    if (b.mu().length() > best) {
      best = b.mu().length();
      key = b;
      coeff = a;
    }

  Certificate cert;
  cert.kind = CertKind::Graded;
  cert.grade = k;
  cert.x0 = CylSet({BasicBisection::unit(key.mu())});
  cert.y0 = CylSet({BasicBisection::unit(key.nu())});
  cert.b = CylSet({key});
  cert.c = coeff;
  cert.k = cert.y0;
  return cert;
}

CkSearchResult ck_certificate(const AlgebraElement& f, const Point& seed, int depth_limit) {
  if (f.is_zero()) throw ZeroElement();
  const Graph& g = *seed.graph();
  CkSearchResult res;
  res.condition_l_holds = condition_L(g);

  // Anchor the search at one element of supp(f) whose source runs along the
  // seed's aperiodic tail; the first key that reaches the seed wins.
  struct Anchor {
    Point x, y;
    int m0, n0;  // window lengths covering the anchor prefixes themselves
  };
  std::vector<Anchor> anchors;
  for (const auto& [key, coeff] : f.terms()) {
    auto pi = connect(g, key.nu().source_vertex(), seed.range_vertex());
    if (!pi) continue;
    anchors.push_back({seed.prepend(compose_paths(key.mu(), *pi)),
                       seed.prepend(compose_paths(key.nu(), *pi)),
                       key.mu().length() + pi->length(),
                       key.nu().length() + pi->length()});
  }
  if (anchors.empty()) throw DomainError("no support key connects to the seed point");

  // Window the two sides at matching tail depths: past the anchor prefixes
  // both cylinders constrain the same tail letters, so the source of the
  // windowed bisection is exactly Y0.  Scanning depths outermost returns the
  // smallest-depth certificate over all anchors.
  for (int l = 0; l <= depth_limit; ++l) {
    for (const Anchor& a : anchors) {
      if (l < a.n0) continue;
      res.depth_reached = l;
      CylSet y0({BasicBisection::unit(a.y.prefix(l))});
      CylSet x0({BasicBisection::unit(a.x.prefix(a.m0 + l - a.n0))});
      AlgebraElement f0 = window(x0, f, y0);
      if (f0.is_zero()) continue;
      auto c = constant_coefficient(f0);
      if (!c) continue;
      CylSet b = support(f0);
      if (!is_bisection(b)) continue;
      if (!star_identity(*c, b, y0)) continue;
      Certificate cert;
      cert.kind = CertKind::CuntzKrieger;
      cert.x0 = x0;
      cert.y0 = y0;
      cert.b = b;
      cert.c = *c;
      cert.k = y0;
      res.cert = cert;
      return res;
    }
  }
  res.depth_reached = depth_limit;
  return res;
}

bool verify_certificate(const Certificate& cert, const AlgebraElement& f) {
  if (cert.c.is_zero()) return false;
  AlgebraElement h = f;
  if (cert.kind == CertKind::Graded) {
    AlgebraElement gk = homogeneous_component(f, cert.grade);
    if (gk.is_zero()) return false;
    h = cert.grade != 0 ? mul(star(gk), gk) : gk;
  }
  AlgebraElement f0 = window(cert.x0, h, cert.y0);
  if (f0.is_zero()) return false;
  auto c = constant_coefficient(f0);
  if (!c || !(*c == cert.c)) return false;
  CylSet b = support(f0);
  if (!is_bisection(b)) return false;
  return star_identity(*c, b, cert.k);
}

}  // namespace sta
