#pragma once

#include <optional>
#include <string>

#include "sta/algebra.hpp"

namespace sta {

enum class CertKind { Graded, CuntzKrieger };

/// A finite witness that any (graded, resp. injective-on-diagonal) algebra
/// homomorphism annihilating the certified element also annihilates 1_K.
struct Certificate {
  CertKind kind = CertKind::CuntzKrieger;
  int grade = 0;  // graded variant only
  CylSet x0;      // left window, unit-space cylinders
  CylSet y0;      // right window
  CylSet b;       // witness bisection (recomputed by the verifier, not serialized)
  GaussianRational c;
  CylSet k;       // target: 1_K lies in the ideal generated by the element
};

struct IsotropyReport {
  Point u;
  std::int64_t generator = 0;  // of uGu as a subgroup of Z; 0 means trivial

  std::string str() const;
};

/// For an eventually periodic point with primitive cycle rho the isotropy is
/// |rho| Z; aperiodic points have trivial isotropy.
IsotropyReport isotropy_group(const Point& u);

/// Every cycle has an entrance: some vertex on it receives a second edge.
bool condition_L(const Graph& g);

/// Certificate for a nonzero element under graded hypotheses: picks the
/// nonzero homogeneous component g_k of smallest |k| (ties toward positive),
/// passes to f = g_k* g_k when k != 0, and windows down to a scalar multiple
/// of a single-key indicator.  Always terminates.  Throws ZeroElement.
Certificate graded_certificate(const AlgebraElement& g);

struct CkSearchResult {
  std::optional<Certificate> cert;
  int depth_reached = 0;        // successful depth, or the exhausted limit
  bool condition_l_holds = true;
};

/// Window search along one aperiodic seed point: for growing prefix depths
/// l <= depth_limit tests whether 1_{X0} f 1_{Y0} is a constant multiple of
/// a bisection indicator.  May exhaust the depth budget.  Throws ZeroElement;
/// DomainError when no support key connects to the seed.
CkSearchResult ck_certificate(const AlgebraElement& f, const Point& seed, int depth_limit);

/// Symbolic re-check of the defining identities; false on any mismatch.
bool verify_certificate(const Certificate& cert, const AlgebraElement& f);

}  // namespace sta
