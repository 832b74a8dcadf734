#pragma once

#include <string>

#include "sta/deaconu_renault.hpp"
#include "sta/lpa.hpp"
#include "sta/representation.hpp"
#include "sta/uniqueness.hpp"

namespace sta {

/// `.`-separated edge names, or a lone vertex name for an empty path.
Path parse_path(const std::string& text, const Graph& g);

/// Expression grammar `(coeff)[mu|nu]` with `+`/`-` between terms; `0` for
/// the zero element.  Errors carry line/column positions.
AlgebraElement parse_element(const std::string& text, const Graph& g);

/// Canonical rendering; round-trips bit-exactly through parse_element.
std::string print_element(const AlgebraElement& f);

GaussianRational parse_coeff(const std::string& text);

/// Eventually periodic point `head:(cycle)`, e.g. `a.b:(a)` for ab aaa...;
/// an empty head is the anchor vertex name, e.g. `v:(a.b)`.
Point parse_point(const std::string& text, const Graph& g);

/// `(x,n,y)` with points as above; the tail-matching witness is found by
/// search.  Throws DomainError when the points share no shifted tail.
GroupoidElement parse_groupoid_element(const std::string& text, const Graph& g);

/// Words `p_<v>`, `s_<e>`, `s_<e>^*` (or `s_<e>*`), juxtaposed with spaces,
/// optional leading `(coeff)`, summed with `+`/`-`.
LpaExpr parse_lpa(const std::string& text, const Graph& g);

std::string print_lpa(const LpaNormal& x);

/// `dim <n>` then `p <v> <entries>` / `s <e> <entries>` / `sstar <e>
/// <entries>`, row-major; optional `cocycle trivial`.
GeneratorAssignment parse_rep(const std::string& text, const Graph& g);

/// `{[mu|nu],...}`; `{}` is the empty set.
CylSet parse_cylset(const std::string& text, const Graph& g);
std::string print_cylset(const CylSet& s);

Certificate parse_certificate(const std::string& text, const Graph& g);
std::string print_certificate(const Certificate& cert);

/// `[a.b]u[b]` with `.`-separated letters; `[]` is the empty set.
WordSet parse_wordset(const std::string& text, const Sft& sft);

/// `Z(<wordset>,<wordset>,k,l)`, validated on parse.
DrBasic parse_dr_basic(const std::string& text, const Sft& sft);

/// Exact rationals print bare, enclosures as `[lo,hi]`.
std::string print_norm(const NormValue& v);

}  // namespace sta
