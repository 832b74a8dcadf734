#pragma once

#include <map>
#include <vector>

#include "sta/bisection.hpp"
#include "sta/rational.hpp"

namespace sta {

using Term = std::pair<BasicBisection, GaussianRational>;

/// Element of the groupoid algebra: finite exact-coefficient combination of
/// basic bisection indicators, kept in canonical reduced form.  Keys are
/// pairwise disjoint per degree; complete sibling families with equal
/// coefficients are merged; zero coefficients are dropped.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const std::map<BasicBisection, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  friend AlgebraElement normalize(const std::vector<Term>&);
  std::map<BasicBisection, GaussianRational> terms_;
};

/// Canonical form of a raw indicator combination.
AlgebraElement normalize(const std::vector<Term>& raw);

/// Pointwise c1*f + c2*g.
AlgebraElement linear_combine(const GaussianRational& c1, const AlgebraElement& f,
                              const GaussianRational& c2, const AlgebraElement& g);

/// Convolution product, via bilinear extension of 1_U 1_V = 1_{UV}.
AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);

/// Involution f*(gamma) = conj(f(gamma^-1)).
AlgebraElement star(const AlgebraElement& f);

/// The degree-n part of f.
AlgebraElement homogeneous_component(const AlgebraElement& f, int n);
/// The degrees with nonzero component, ascending.
std::vector<int> degrees(const AlgebraElement& f);

/// Point evaluation.
GaussianRational eval(const AlgebraElement& f, const GroupoidElement& g);

/// Clopen support as a union of basics.
CylSet support(const AlgebraElement& f);

/// Indicator 1_S of a unit-space cylinder set.
AlgebraElement indicator(const CylSet& s);
/// The identity 1_{G^0} = sum of vertex cylinder indicators.
AlgebraElement one(const Graph& g);
AlgebraElement scale(const GaussianRational& c, const AlgebraElement& f);

/// I-norm: max over units of the range/source fiber sums of |f|; exact when
/// every |coefficient| is rational, else an enclosure of width
/// <= 2^-precision_bits.
NormValue i_norm(const AlgebraElement& f, unsigned precision_bits = 40);

}  // namespace sta
