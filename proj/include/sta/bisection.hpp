#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "sta/point.hpp"

namespace sta {

/// Basic compact open graded bisection Z(mu, nu) named by a path pair with
/// s(mu) = s(nu): the set {(mu x, |mu|-|nu|, nu x) : x infinite, r(x) = s(mu)}.
class BasicBisection {
 public:
  BasicBisection() = default;
  /// Throws DomainError unless s(mu) = s(nu).
  BasicBisection(Path mu, Path nu);

  /// Unit-space cylinder Z(w) = Z(w, w).
  static BasicBisection unit(Path w) { return BasicBisection(w, w); }

  const Path& mu() const { return mu_; }
  const Path& nu() const { return nu_; }
  int degree() const { return mu_.length() - nu_.length(); }
  const Graph* graph() const { return mu_.graph(); }

  bool contains(const GroupoidElement& g) const;

  /// Rendering `[mu|nu]` with '.'-separated edge names.
  std::string str() const;

  friend bool operator==(const BasicBisection&, const BasicBisection&) = default;
  /// Order: (degree, mu, nu) lexicographically.
  friend std::strong_ordering operator<=>(const BasicBisection& a, const BasicBisection& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.mu_ <=> b.mu_; c != 0) return c;
    return a.nu_ <=> b.nu_;
  }

 private:
  Path mu_, nu_;
};

/// Z(alpha,beta) Z(gamma,delta) as a basic, or nullopt for the empty set.
std::optional<BasicBisection> mul_basic(const BasicBisection& a, const BasicBisection& b);

/// Z(mu,nu)^-1 = Z(nu,mu).
BasicBisection inv_basic(const BasicBisection& a);

/// Intersection; two basics of equal degree are nested or disjoint, across
/// degrees they are disjoint.
std::optional<BasicBisection> intersect_basic(const BasicBisection& a, const BasicBisection& b);

/// {Z(mu e, nu e) : r(e) = s(mu)}; a disjoint decomposition of the input.
std::vector<BasicBisection> expand_siblings(const BasicBisection& a);

/// Finite union of basics, stored pairwise disjoint (refined per degree to the
/// maximal path length present, then deduplicated).
class CylSet {
 public:
  CylSet() = default;
  explicit CylSet(std::vector<BasicBisection> members);

  const std::vector<BasicBisection>& members() const { return members_; }
  bool empty() const { return members_.empty(); }

  bool contains(const GroupoidElement& g) const;
  bool contains_set(const CylSet& other) const;

  /// Minimal representative: complete sibling families merged bottom-up.
  /// Used for semantic set equality.
  std::vector<BasicBisection> canonical_members() const;

  /// Set-level equality of the denoted subsets of G.
  friend bool operator==(const CylSet& a, const CylSet& b);

  std::string str() const;  // '{' b1 ',' b2 ... '}'

 private:
  std::vector<BasicBisection> members_;
};

/// Remark-style disjointification: pairwise-disjoint basics with the same
/// union, each contained in some input.
CylSet disjointify(const std::vector<BasicBisection>& cover);

/// True iff the source cylinders are pairwise disjoint and the range
/// cylinders are pairwise disjoint (the union is then a bisection).
bool is_bisection(const CylSet& s);

bool member(const GroupoidElement& g, const CylSet& s);

/// Source set s(S) as a unit-space CylSet (cylinders Z(nu_i)).
CylSet source_set(const CylSet& s);
/// Range set r(S) as a unit-space CylSet.
CylSet range_set(const CylSet& s);

}  // namespace sta
