#include "sta/algebra.hpp"

#include <algorithm>

#include "sta/errors.hpp"

namespace sta {

namespace {

// Splits a key into siblings until mu has the target length, keeping the
// coefficient on every piece.
void refine_term(const BasicBisection& key, const GaussianRational& c, int target_len,
                 std::map<BasicBisection, GaussianRational>& acc) {
  if (key.mu().length() >= target_len) {
    acc[key] += c;
    return;
  }
  for (const auto& s : expand_siblings(key)) refine_term(s, c, target_len, acc);
}

}  // namespace

AlgebraElement normalize(const std::vector<Term>& raw) {
  std::map<int, std::vector<Term>> per_degree;
  for (const auto& t : raw)
    if (!t.second.is_zero()) per_degree[t.first.degree()].push_back(t);

  std::map<BasicBisection, GaussianRational> keys;
  for (const auto& [deg, group] : per_degree) {
    int len = 0;
    for (const auto& [b, c] : group) len = std::max(len, b.mu().length());
    std::map<BasicBisection, GaussianRational> acc;
    for (const auto& [b, c] : group) refine_term(b, c, len, acc);
    for (auto& [b, c] : acc)
      if (!c.is_zero()) keys.emplace(b, c);
  }

  // Merge complete sibling families carrying one common coefficient.  The
  // parent of a key is unique, so the fixpoint does not depend on scan order.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<BasicBisection, std::vector<BasicBisection>> by_parent;
    for (const auto& [k, c] : keys) {
      if (k.mu().empty() || k.nu().empty()) continue;
      if (k.mu().edge_at(k.mu().length() - 1) != k.nu().edge_at(k.nu().length() - 1)) continue;
      by_parent[BasicBisection(k.mu().prefix(k.mu().length() - 1),
                               k.nu().prefix(k.nu().length() - 1))]
          .push_back(k);
    }
    for (const auto& [parent, children] : by_parent) {
      size_t family = parent.graph()->in_edges(parent.mu().source_vertex()).size();
      if (children.size() != family) continue;
      GaussianRational c = keys.at(children.front());
      bool uniform = std::all_of(children.begin(), children.end(),
                                 [&](const BasicBisection& k) { return keys.at(k) == c; });
      if (!uniform) continue;
      for (const auto& k : children) keys.erase(k);
      keys.emplace(parent, c);
      changed = true;
    }
  }

  AlgebraElement out;
  out.terms_ = std::move(keys);
  return out;
}

AlgebraElement linear_combine(const GaussianRational& c1, const AlgebraElement& f,
                              const GaussianRational& c2, const AlgebraElement& g) {
  std::vector<Term> raw;
  for (const auto& [b, c] : f.terms()) raw.emplace_back(b, c1 * c);
  for (const auto& [b, c] : g.terms()) raw.emplace_back(b, c2 * c);
  return normalize(raw);
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g) {
  std::vector<Term> raw;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      if (auto p = mul_basic(a, b)) raw.emplace_back(*p, ca * cb);
  return normalize(raw);
}

AlgebraElement star(const AlgebraElement& f) {
  std::vector<Term> raw;
  for (const auto& [b, c] : f.terms()) raw.emplace_back(inv_basic(b), c.conj());
  return normalize(raw);
}

AlgebraElement homogeneous_component(const AlgebraElement& f, int n) {
  std::vector<Term> raw;
  for (const auto& [b, c] : f.terms())
    if (b.degree() == n) raw.emplace_back(b, c);
  return normalize(raw);
}

std::vector<int> degrees(const AlgebraElement& f) {
  std::vector<int> out;
  for (const auto& [b, c] : f.terms())
    if (out.empty() || out.back() != b.degree()) out.push_back(b.degree());
  return out;
}

GaussianRational eval(const AlgebraElement& f, const GroupoidElement& g) {
  GaussianRational v;
  for (const auto& [b, c] : f.terms())
    if (b.contains(g)) v += c;
  return v;
}

CylSet support(const AlgebraElement& f) {
  std::vector<BasicBisection> keys;
  for (const auto& [b, c] : f.terms()) keys.push_back(b);
  return CylSet(keys);
}

AlgebraElement indicator(const CylSet& s) {
  std::vector<Term> raw;
  for (const auto& b : s.members()) raw.emplace_back(b, GaussianRational(1));
  return normalize(raw);
}

AlgebraElement one(const Graph& g) {
  std::vector<Term> raw;
  for (int v = 0; v < g.vertex_count(); ++v)
    raw.emplace_back(BasicBisection::unit(Path(&g, v)), GaussianRational(1));
  return normalize(raw);
}

AlgebraElement scale(const GaussianRational& c, const AlgebraElement& f) {
  std::vector<Term> raw;
  for (const auto& [b, cc] : f.terms()) raw.emplace_back(b, c * cc);
  return normalize(raw);
}

namespace {

// Max over refinement cells of the fiber sums along one side.  `side` picks
// nu (source fibers) or mu (range fibers).
NormValue fiber_max(const AlgebraElement& f, bool source_side, unsigned precision_bits) {
  const Graph* g = f.terms().begin()->first.graph();
  int len = 0;
  for (const auto& [b, c] : f.terms())
    len = std::max(len, source_side ? b.nu().length() : b.mu().length());

  // Per-term precision: total width stays below 2^-precision_bits as long as
  // each cell holds at most 2^slack terms.
  unsigned slack = 1;
  while ((size_t(1) << slack) < f.terms().size() + 1) ++slack;
  unsigned bits = precision_bits + slack;

  bool exact = true;
  Rational best_lo = 0, best_hi = 0;
  bool first = true;
  for (const auto& w : all_paths(*g, len)) {
    Rational lo = 0, hi = 0;
    for (const auto& [b, c] : f.terms()) {
      const Path& p = source_side ? b.nu() : b.mu();
      if (!p.is_prefix_of(w)) continue;
      NormValue a = abs_value(c, bits);
      if (auto* r = std::get_if<Rational>(&a)) {
        lo += *r;
        hi += *r;
      } else {
        exact = false;
        lo += std::get<Interval>(a).lo;
        hi += std::get<Interval>(a).hi;
      }
    }
    if (first || lo > best_lo) best_lo = lo;
    if (first || hi > best_hi) best_hi = hi;
    first = false;
  }
  if (exact) return best_lo;
  return Interval{best_lo, best_hi};
}

}  // namespace

NormValue i_norm(const AlgebraElement& f, unsigned precision_bits) {
  if (f.is_zero()) return Rational(0);
  NormValue r = fiber_max(f, false, precision_bits);
  NormValue s = fiber_max(f, true, precision_bits);
  if (auto* re = std::get_if<Rational>(&r))
    if (auto* se = std::get_if<Rational>(&s)) return std::max(*re, *se);
  auto as_iv = [](const NormValue& v) {
    if (auto* e = std::get_if<Rational>(&v)) return Interval{*e, *e};
    return std::get<Interval>(v);
  };
  Interval ri = as_iv(r), si = as_iv(s);
  return Interval{std::max(ri.lo, si.lo), std::max(ri.hi, si.hi)};
}

}  // namespace sta
