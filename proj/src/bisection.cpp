#include "sta/bisection.hpp"

#include <algorithm>
#include <map>

#include "sta/errors.hpp"

namespace sta {

BasicBisection::BasicBisection(Path mu, Path nu) : mu_(std::move(mu)), nu_(std::move(nu)) {
  if (mu_.source_vertex() != nu_.source_vertex())
    throw DomainError("Z(mu,nu) requires s(mu) = s(nu)");
}

bool BasicBisection::contains(const GroupoidElement& g) const {
  if (g.degree() != degree()) return false;
  const Point& x = g.range_point();
  const Point& y = g.source_point();
  if (!mu_.is_prefix_of(x.prefix(mu_.length()))) return false;
  if (!nu_.is_prefix_of(y.prefix(nu_.length()))) return false;
  // Tail agreement beyond the prefixes.  The witness guarantees agreement from
  // (k, l) on; check the remaining stretch edge by edge.
  for (int i = 0; i < g.witness_k() - mu_.length(); ++i)
    if (x.edge_at(mu_.length() + i) != y.edge_at(nu_.length() + i)) return false;
  return true;
}

std::string BasicBisection::str() const { return "[" + mu_.str() + "|" + nu_.str() + "]"; }

std::optional<BasicBisection> mul_basic(const BasicBisection& a, const BasicBisection& b) {
  const Path& beta = a.nu();
  const Path& gamma = b.mu();
  if (beta.is_prefix_of(gamma)) {
    // gamma = beta gamma'  =>  Z(alpha gamma', delta)
    Path gp = gamma.suffix(beta.length());
    return BasicBisection(a.mu().compose(gp), b.nu());
  }
  if (gamma.is_prefix_of(beta)) {
    // beta = gamma beta'  =>  Z(alpha, delta beta')
    Path bp = beta.suffix(gamma.length());
    return BasicBisection(a.mu(), b.nu().compose(bp));
  }
  return std::nullopt;
}

BasicBisection inv_basic(const BasicBisection& a) { return BasicBisection(a.nu(), a.mu()); }

std::optional<BasicBisection> intersect_basic(const BasicBisection& a, const BasicBisection& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  if (a.mu().is_prefix_of(b.mu()) && a.nu().is_prefix_of(b.nu()) &&
      b.mu().suffix(a.mu().length()) == b.nu().suffix(a.nu().length()))
    return b;
  if (b.mu().is_prefix_of(a.mu()) && b.nu().is_prefix_of(a.nu()) &&
      a.mu().suffix(b.mu().length()) == a.nu().suffix(b.nu().length()))
    return a;
  return std::nullopt;
}

std::vector<BasicBisection> expand_siblings(const BasicBisection& a) {
  const Graph& g = *a.graph();
  std::vector<BasicBisection> out;
  for (int e : g.in_edges(a.mu().source_vertex()))
    out.emplace_back(a.mu().append(e), a.nu().append(e));
  return out;
}

namespace {

// Refine a list of basics of one degree so that every member has mu-length
// target_len, then sort and deduplicate.  Distinct equal-length pairs of one
// degree are disjoint.
std::vector<BasicBisection> refine_to(const std::vector<BasicBisection>& in, int target_len) {
  std::vector<BasicBisection> out;
  for (const auto& b : in) {
    std::vector<BasicBisection> frontier{b};
    while (frontier.front().mu().length() < target_len) {
      std::vector<BasicBisection> next;
      for (const auto& f : frontier) {
        auto sibs = expand_siblings(f);
        next.insert(next.end(), sibs.begin(), sibs.end());
      }
      frontier = std::move(next);
    }
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BasicBisection> disjointify_members(const std::vector<BasicBisection>& cover) {
  std::map<int, std::vector<BasicBisection>> per_degree;
  for (const auto& b : cover) per_degree[b.degree()].push_back(b);
  std::vector<BasicBisection> out;
  for (auto& [deg, group] : per_degree) {
    int len = 0;
    for (const auto& b : group) len = std::max(len, b.mu().length());
    auto refined = refine_to(group, len);
    out.insert(out.end(), refined.begin(), refined.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Replaces complete sibling families by their parent until no family is
// complete.  Parents of distinct families are distinct, so the result does
// not depend on scan order.
std::vector<BasicBisection> merge_families(std::vector<BasicBisection> keys) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<BasicBisection, std::vector<BasicBisection>> by_parent;
    for (const auto& k : keys) {
      if (k.mu().empty() || k.nu().empty()) continue;
      int le = k.mu().edge_at(k.mu().length() - 1);
      if (le != k.nu().edge_at(k.nu().length() - 1)) continue;
      by_parent[BasicBisection(k.mu().prefix(k.mu().length() - 1),
                               k.nu().prefix(k.nu().length() - 1))]
          .push_back(k);
    }
    for (const auto& [parent, children] : by_parent) {
      size_t family = parent.graph()->in_edges(parent.mu().source_vertex()).size();
      if (children.size() != family) continue;
      for (const auto& c : children) keys.erase(std::find(keys.begin(), keys.end(), c));
      keys.push_back(parent);
      changed = true;
    }
    std::sort(keys.begin(), keys.end());
  }
  return keys;
}

}  // namespace

CylSet::CylSet(std::vector<BasicBisection> members)
    : members_(disjointify_members(members)) {}

bool CylSet::contains(const GroupoidElement& g) const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](const BasicBisection& b) { return b.contains(g); });
}

bool CylSet::contains_set(const CylSet& other) const {
  // Per degree, refine the other set's members against ours; nested-or-disjoint
  // makes containment a prefix matter.
  for (const auto& b : other.members_) {
    std::vector<BasicBisection> frontier{b};
    // Refine b until each piece is comparable with some member.
    int deepest = 0;
    for (const auto& m : members_)
      if (m.degree() == b.degree()) deepest = std::max(deepest, m.mu().length());
    while (!frontier.empty() && frontier.front().mu().length() < deepest) {
      std::vector<BasicBisection> next;
      for (const auto& f : frontier) {
        auto sibs = expand_siblings(f);
        next.insert(next.end(), sibs.begin(), sibs.end());
      }
      frontier = std::move(next);
    }
    for (const auto& piece : frontier) {
      bool covered = std::any_of(members_.begin(), members_.end(), [&](const BasicBisection& m) {
        auto i = intersect_basic(piece, m);
        return i && *i == piece;
      });
      if (!covered) return false;
    }
  }
  return true;
}

std::vector<BasicBisection> CylSet::canonical_members() const {
  return merge_families(members_);
}

bool operator==(const CylSet& a, const CylSet& b) {
  return a.canonical_members() == b.canonical_members();
}

std::string CylSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ",";
    s += members_[i].str();
  }
  return s + "}";
}

CylSet disjointify(const std::vector<BasicBisection>& cover) { return CylSet(cover); }

bool is_bisection(const CylSet& s) {
  const auto& ms = s.members();
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      const Path &si = ms[i].nu(), &sj = ms[j].nu();
      if (si.is_prefix_of(sj) || sj.is_prefix_of(si)) return false;
      const Path &ri = ms[i].mu(), &rj = ms[j].mu();
      if (ri.is_prefix_of(rj) || rj.is_prefix_of(ri)) return false;
    }
  return true;
}

bool member(const GroupoidElement& g, const CylSet& s) { return s.contains(g); }

CylSet source_set(const CylSet& s) {
  std::vector<BasicBisection> out;
  for (const auto& b : s.members()) out.push_back(BasicBisection::unit(b.nu()));
  return CylSet(out);
}

CylSet range_set(const CylSet& s) {
  std::vector<BasicBisection> out;
  for (const auto& b : s.members()) out.push_back(BasicBisection::unit(b.mu()));
  return CylSet(out);
}

}  // namespace sta
