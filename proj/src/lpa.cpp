#include "sta/lpa.hpp"

#include <sstream>

namespace sta {

namespace {

struct Monomial {
  Path mu, nu;  // s(mu) = s(nu)
  GaussianRational coeff;
};

// Right-multiplies a spanning-form monomial by one generator, using the
// Cuntz-Krieger relations; drops the term when the product is zero.
std::optional<Monomial> absorb(const Graph& g, Monomial m, const LpaSymbol& s) {
  switch (s.kind) {
    case LpaSymbol::VertexIdem:
      if (m.nu.range_vertex() != s.index) return std::nullopt;
      return m;
    case LpaSymbol::EdgeGen:
      if (!m.nu.empty()) {
        if (m.nu.edge_at(0) != s.index) return std::nullopt;  // s_f* s_e = 0
        m.nu = m.nu.suffix(1);
        return m;
      }
      if (m.nu.range_vertex() != g.range(s.index)) return std::nullopt;
      m.mu = m.mu.append(s.index);
      m.nu = Path(&g, g.source(s.index));
      return m;
    case LpaSymbol::EdgeGenStar: {
      Path e(&g, std::vector<int>{s.index});
      if (e.source_vertex() != m.nu.range_vertex()) return std::nullopt;
      m.nu = e.compose(m.nu);
      return m;
    }
  }
  return std::nullopt;
}

std::vector<Monomial> word_to_monomials(const Graph& g, const LpaWord& w) {
  std::vector<Monomial> state;
  for (int v = 0; v < g.vertex_count(); ++v)
    state.push_back({Path(&g, v), Path(&g, v), w.coeff});
  for (const auto& s : w.symbols) {
    std::vector<Monomial> next;
    for (auto& m : state)
      if (auto r = absorb(g, std::move(m), s)) next.push_back(std::move(*r));
    state = std::move(next);
  }
  return state;
}

}  // namespace

std::vector<std::tuple<Path, Path, GaussianRational>> LpaNormal::monomials() const {
  std::vector<std::tuple<Path, Path, GaussianRational>> out;
  for (const auto& [b, c] : image_.terms()) out.emplace_back(b.mu(), b.nu(), c);
  return out;
}

std::string LpaNormal::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, nu, c] : monomials()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << coeff_to_string(c) << ")";
    if (mu.empty() && nu.empty()) {
      out << " p_" << mu.str();
    } else {
      if (!mu.empty())
        for (int i = 0; i < mu.length(); ++i) out << " s_" << mu.graph()->edge(mu.edge_at(i)).id;
      if (mu.empty()) out << " p_" << mu.str();
      for (int i = nu.length() - 1; i >= 0; --i)
        out << " s_" << nu.graph()->edge(nu.edge_at(i)).id << "^*";
    }
  }
  return out.str();
}

LpaNormal reduce_lpa(const Graph& g, const LpaExpr& x) {
  std::vector<Term> raw;
  for (const auto& w : x)
    for (const auto& m : word_to_monomials(g, w))
      raw.emplace_back(BasicBisection(m.mu, m.nu), m.coeff);
  return LpaNormal(normalize(raw));
}

AlgebraElement phi(const Graph& g, const LpaExpr& x) {
  AlgebraElement unit = one(g);
  AlgebraElement sum;
  for (const auto& w : x) {
    AlgebraElement acc = scale(w.coeff, unit);
    for (const auto& s : w.symbols) {
      AlgebraElement gen;
      switch (s.kind) {
        case LpaSymbol::VertexIdem:
          gen = normalize({{BasicBisection::unit(Path(&g, s.index)), GaussianRational(1)}});
          break;
        case LpaSymbol::EdgeGen:
          gen = normalize({{BasicBisection(Path(&g, std::vector<int>{s.index}),
                                           Path(&g, g.source(s.index))),
                            GaussianRational(1)}});
          break;
        case LpaSymbol::EdgeGenStar:
          gen = normalize({{BasicBisection(Path(&g, g.source(s.index)),
                                           Path(&g, std::vector<int>{s.index})),
                            GaussianRational(1)}});
          break;
      }
      acc = mul(acc, gen);
    }
    sum = linear_combine(GaussianRational(1), sum, GaussianRational(1), acc);
  }
  return sum;
}

LpaNormal phi_inverse(const AlgebraElement& f) { return LpaNormal(f); }

}  // namespace sta
