#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sta/io.hpp"
#include "sta/lpa.hpp"

using namespace sta;

namespace {

struct Fixture {
  Graph g = testing::rose(2);

  LpaExpr L(const std::string& text) const { return parse_lpa(text, g); }
  AlgebraElement E(const std::string& text) const { return parse_element(text, g); }
};

// The word s_mu s_nu* as a one-term expression.
LpaExpr monomial(const Path& mu, const Path& nu) {
  LpaWord w{GaussianRational(1), {}};
  if (mu.empty() && nu.empty())
    w.symbols.push_back({LpaSymbol::VertexIdem, mu.range_vertex()});
  for (int e : mu.edges()) w.symbols.push_back({LpaSymbol::EdgeGen, e});
  for (int i = nu.length() - 1; i >= 0; --i)
    w.symbols.push_back({LpaSymbol::EdgeGenStar, nu.edge_at(i)});
  return {w};
}

LpaExpr concat(const LpaExpr& x, const LpaExpr& y) {
  LpaExpr out;
  for (const auto& a : x)
    for (const auto& b : y) {
      LpaWord w{a.coeff * b.coeff, a.symbols};
      w.symbols.insert(w.symbols.end(), b.symbols.begin(), b.symbols.end());
      out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("reduction with the Cuntz-Krieger relations") {
  Fixture f;
  CHECK(reduce_lpa(f.g, f.L("s_a^* s_b")).is_zero());
  CHECK(reduce_lpa(f.g, f.L("s_a s_a^* + s_b s_b^*")) == reduce_lpa(f.g, f.L("p_v")));
  CHECK(reduce_lpa(f.g, f.L("s_a^* s_a")) == reduce_lpa(f.g, f.L("p_v")));
  CHECK(reduce_lpa(f.g, f.L("p_v p_v")) == reduce_lpa(f.g, f.L("p_v")));
  CHECK(reduce_lpa(f.g, f.L("p_v s_a")) == reduce_lpa(f.g, f.L("s_a")));
  CHECK(reduce_lpa(f.g, f.L("s_a p_v")) == reduce_lpa(f.g, f.L("s_a")));
}

TEST_CASE("phi on generators") {
  Fixture f;
  CHECK(phi(f.g, f.L("p_v")) == f.E("(1)[v|v]"));
  CHECK(phi(f.g, f.L("s_a s_b^*")) == f.E("(1)[a|b]"));
  CHECK(phi(f.g, f.L("s_a^* s_b")).is_zero());
  CHECK(!phi(f.g, f.L("p_v")).is_zero());
  Graph two = Graph::parse("v v\nv w\ne e v w\ne f w v\ne l v v\n");
  for (int v = 0; v < two.vertex_count(); ++v) {
    LpaExpr pv{{GaussianRational(1), {{LpaSymbol::VertexIdem, v}}}};
    CHECK(!phi(two, pv).is_zero());
  }
}

TEST_CASE("phi_inverse transcribes keys") {
  Fixture f;
  auto mono = phi_inverse(f.E("(1)[v|v]")).monomials();
  REQUIRE(mono.size() == 1);
  CHECK(std::get<0>(mono[0]).empty());
  CHECK(std::get<1>(mono[0]).empty());

  mono = phi_inverse(f.E("(1)[a.b|b]")).monomials();
  REQUIRE(mono.size() == 1);
  CHECK(std::get<0>(mono[0]).str() == "a.b");
  CHECK(std::get<1>(mono[0]).str() == "b");
}

TEST_CASE("phi round-trips") {
  std::vector<Graph> graphs{testing::rose(2),
                            Graph::parse("v v\nv w\ne e v w\ne f w v\ne l v v\n")};
  testing::Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const Graph& g = graphs[t % graphs.size()];
    AlgebraElement f = rng.element(g, rng.geti(1, 3), 2);
    LpaNormal n = phi_inverse(f);
    // phi of the normal form is the element back.
    LpaExpr expr;
    for (const auto& [mu, nu, c] : n.monomials()) {
      LpaExpr m = monomial(mu, nu);
      m[0].coeff = c;
      expr.push_back(m[0]);
    }
    CHECK(phi(g, expr) == f);
  }
}

TEST_CASE("multiplication tables transport along phi") {
  // reduce_lpa(x y) = phi_inverse(phi(x) phi(y)) for all monomial pairs.
  std::vector<Graph> graphs{testing::rose(2), Graph::parse("v v\nv w\ne a v w\ne b w v\n")};
  for (const Graph& g : graphs) {
    std::vector<std::pair<Path, Path>> monos;
    for (const Path& mu : all_paths_up_to(g, 3))
      for (const Path& nu : all_paths_up_to(g, 3))
        if (mu.source_vertex() == nu.source_vertex()) monos.emplace_back(mu, nu);
    for (const auto& [m1, n1] : monos)
      for (const auto& [m2, n2] : monos) {
        LpaExpr x = monomial(m1, n1), y = monomial(m2, n2);
        LpaNormal direct = reduce_lpa(g, concat(x, y));
        LpaNormal transported = phi_inverse(mul(phi(g, x), phi(g, y)));
        CHECK(direct == transported);
        CHECK(reduce_lpa(g, x) == phi_inverse(phi(g, x)));
      }
  }
}

TEST_CASE("phi is graded") {
  for (const Graph& g : {testing::rose(2), testing::rose(3)}) {
    for (const Path& mu : all_paths_up_to(g, 3))
      for (const Path& nu : all_paths_up_to(g, 3)) {
        if (mu.source_vertex() != nu.source_vertex()) continue;
        AlgebraElement im = phi(g, monomial(mu, nu));
        REQUIRE(!im.is_zero());
        CHECK(degrees(im) == std::vector<int>{mu.length() - nu.length()});
      }
  }
}
