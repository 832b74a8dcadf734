#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sta/algebra.hpp"

namespace sta {

/// Generators of the Leavitt path algebra of a graph.
struct LpaSymbol {
  enum Kind { VertexIdem, EdgeGen, EdgeGenStar } kind;
  int index;  // vertex index for VertexIdem, edge index otherwise
  friend bool operator==(const LpaSymbol&, const LpaSymbol&) = default;
};

/// One formal word: coefficient times a product of symbols.  An empty symbol
/// list denotes the identity sum_v p_v.
struct LpaWord {
  GaussianRational coeff;
  std::vector<LpaSymbol> symbols;
};

using LpaExpr = std::vector<LpaWord>;

/// Canonical spanning form: finite combination of s_mu s_nu* monomials with
/// s(mu) = s(nu), the mirror of the algebra normal form.
class LpaNormal {
 public:
  LpaNormal() = default;
  explicit LpaNormal(AlgebraElement image) : image_(std::move(image)) {}

  /// Monomials as (mu, nu, coefficient) triples, canonically ordered.
  std::vector<std::tuple<Path, Path, GaussianRational>> monomials() const;
  bool is_zero() const { return image_.is_zero(); }
  const AlgebraElement& as_algebra_element() const { return image_; }

  friend bool operator==(const LpaNormal&, const LpaNormal&) = default;

  std::string str() const;

 private:
  AlgebraElement image_;  // keys Z(mu,nu) carry the monomial pairs
};

/// Rewrites an expression to spanning form with the Cuntz-Krieger relations:
/// p_v p_w = delta p_v, s_e* s_f = delta p_{s(e)}, p_{r(e)} s_e = s_e =
/// s_e p_{s(e)}, sum_{r(e)=v} s_e s_e* = p_v.
LpaNormal reduce_lpa(const Graph& g, const LpaExpr& x);

/// The isomorphism: s_mu s_nu* -> 1_{Z(mu,nu)}, p_v -> 1_{Z(v)}.
AlgebraElement phi(const Graph& g, const LpaExpr& x);

/// Constructive inverse: key transcription of the normal form.
LpaNormal phi_inverse(const AlgebraElement& f);

}  // namespace sta
