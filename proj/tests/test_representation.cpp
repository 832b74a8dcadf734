#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sta/errors.hpp"
#include "sta/io.hpp"
#include "sta/representation.hpp"

using namespace sta;

namespace {

Matrix scalar1(const GaussianRational& c) {
  Matrix m(1, 1);
  m.at(0, 0) = c;
  return m;
}

// One-dimensional assignment on the single-loop graph: s_a -> z, s_a* -> 1/z,
// so t on the basic {m - n} is z^(m-n).
GeneratorAssignment loop_scalar(const Graph& c1, const GaussianRational& z) {
  GeneratorAssignment a;
  a.graph = &c1;
  a.dim = 1;
  a.p[0] = scalar1(GaussianRational(1));
  a.s[0] = scalar1(z);
  a.sstar[0] = scalar1(GaussianRational(1) / z);
  return a;
}

// Two-dimensional Laurent assignment on the loop: any invertible M with
// inverse for the star works.
GeneratorAssignment loop_unipotent(const Graph& c1) {
  GeneratorAssignment a;
  a.graph = &c1;
  a.dim = 2;
  a.p[0] = Matrix::identity(2);
  Matrix m = Matrix::identity(2), mi = Matrix::identity(2);
  m.at(0, 1) = GaussianRational(1);
  mi.at(0, 1) = GaussianRational(-1);
  a.s[0] = m;
  a.sstar[0] = mi;
  return a;
}

}  // namespace

TEST_CASE("axiom check on the single loop") {
  Graph c1 = Graph::parse("v v\ne a v v\n");

  AxiomReport r = check_axioms(loop_scalar(c1, GaussianRational(1)), 4);
  CHECK(r.passed);
  CHECK(r.depth == 4);

  CHECK(check_axioms(loop_scalar(c1, GaussianRational(2)), 4).passed);
  CHECK(check_axioms(loop_unipotent(c1), 4).passed);

  // t nonzero only on the unit bisection: R2 fails since {1}{-1} = {0}.
  GeneratorAssignment z;
  z.graph = &c1;
  z.dim = 1;
  z.p[0] = scalar1(GaussianRational(1));
  z.s[0] = scalar1(GaussianRational(0));
  z.sstar[0] = scalar1(GaussianRational(0));
  AxiomReport bad = check_axioms(z, 4);
  CHECK(!bad.passed);
  CHECK(bad.violation.find("R2") == 0);
}

TEST_CASE("dimension mismatch is rejected") {
  Graph c1 = Graph::parse("v v\ne a v v\n");
  GeneratorAssignment a = loop_scalar(c1, GaussianRational(1));
  a.s[0] = Matrix::identity(2);
  CHECK_THROWS_AS(check_axioms(a, 2), DimensionMismatch);
}

TEST_CASE("pi on the loop with t identically one") {
  Graph c1 = Graph::parse("v v\ne a v v\n");
  GeneratorAssignment a = loop_scalar(c1, GaussianRational(1));
  REQUIRE(check_axioms(a, 4).passed);

  CHECK(extend_pi(a, parse_element("(1)[v|v]", c1), 4) ==
        Matrix::identity(1));
  // A nonzero kernel element: the loop graph has nontrivial isotropy, so
  // non-graded representations may kill nonzero elements.
  CHECK(extend_pi(a, parse_element("(1)[v|v] + (-1)[a|v]", c1), 4).is_zero());
  CHECK_THROWS_AS(extend_pi(a, parse_element("(1)[a.a.a.a.a|v]", c1), 4),
                  DepthInsufficient);
}

TEST_CASE("pi is independent of the expression") {
  Graph c1 = Graph::parse("v v\ne a v v\n");
  Graph r2 = testing::rose(2);
  GeneratorAssignment on_c1 = loop_unipotent(c1);
  // The zero assignment on the rose: every axiom holds and pi = 0, which
  // still must be expression independent.
  GeneratorAssignment on_r2;
  on_r2.graph = &r2;
  on_r2.dim = 2;
  on_r2.p[0] = Matrix::zero(2);
  on_r2.s[0] = on_r2.s[1] = Matrix::zero(2);
  on_r2.sstar[0] = on_r2.sstar[1] = Matrix::zero(2);
  REQUIRE(check_axioms(on_c1, 6).passed);
  REQUIRE(check_axioms(on_r2, 3).passed);

  testing::Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const Graph& g = t % 2 ? c1 : r2;
    const GeneratorAssignment& a = t % 2 ? on_c1 : on_r2;
    AlgebraElement f = rng.element(g, rng.geti(1, 3), 2);
    std::vector<Term> raw;
    for (const auto& [key, c] : f.terms()) {
      if (rng.geti(0, 1)) {
        for (const auto& sib : expand_siblings(key)) raw.emplace_back(sib, c);
      } else {
        raw.emplace_back(key, c);
      }
    }
    CHECK(extend_pi_raw(a, raw) == extend_pi(a, f, t % 2 ? 6 : 3));
  }
}

TEST_CASE("pi is a homomorphism") {
  Graph c1 = Graph::parse("v v\ne a v v\n");
  GeneratorAssignment a = loop_unipotent(c1);
  REQUIRE(check_axioms(a, 8).passed);
  testing::Rng rng(52);
  for (int t = 0; t < 300; ++t) {
    AlgebraElement f = rng.element(c1, 2, 3), h = rng.element(c1, 2, 3);
    CHECK(extend_pi(a, mul(f, h), 8) ==
          extend_pi(a, f, 8) * extend_pi(a, h, 8));
  }
}

TEST_CASE("regular representation on the rose") {
  Graph g = testing::rose(2);
  Path a(&g, std::vector<int>{0}), b(&g, std::vector<int>{1}), v(&g, 0);
  Point u = canonical_point(v, a);  // a^infinity
  FiberVector du = FiberVector::delta(u);

  FiberVector r = regular_rep_apply(parse_element("(1)[b|v]", g), du);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries.begin()->first == GroupoidElement::from_pair(b, v, u));
  CHECK(r.entries.begin()->second == GaussianRational(1));

  CHECK(regular_rep_apply(parse_element("(1)[v|v]", g), du) == du);

  // g = 2[a|v] + 3[b|b]: only Z(a,v) has u in its source cylinder, so the
  // diagonal matrix entry of g*g at u is |2|^2.
  AlgebraElement f = parse_element("(2)[a|v] + (3)[b|b]", g);
  GaussianRational q = inner_product(regular_rep_apply(mul(star(f), f), du), du);
  CHECK(q == GaussianRational(4));
}

TEST_CASE("inner product") {
  Graph g = testing::rose(2);
  Path a(&g, std::vector<int>{0}), v(&g, 0);
  Point u = canonical_point(v, a);
  FiberVector du = FiberVector::delta(u);
  GroupoidElement beta = GroupoidElement::from_pair(Path(&g, std::vector<int>{1}), v, u);
  FiberVector db = FiberVector::delta_at(u, beta);

  CHECK(inner_product(du, du) == GaussianRational(1));
  CHECK(inner_product(du, db) == GaussianRational(0));

  Point w = canonical_point(v, Path(&g, std::vector<int>{1}));
  CHECK_THROWS_AS(inner_product(du, FiberVector::delta(w)), BaseMismatch);
}

namespace {

FiberVector random_vector(testing::Rng& rng, const Graph& g, const Point& u) {
  FiberVector out{u, {}};
  int n = rng.geti(1, 3);
  for (int i = 0; i < n; ++i) {
    int k = rng.geti(0, 2);
    Path mu = rng.path(g, 3);
    if (mu.source_vertex() != u.prefix(k).source_vertex()) continue;
    out.entries[GroupoidElement::from_pair(mu, u.prefix(k), u.shift(k))] += rng.coeff();
  }
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("adjoint identity for basic indicators") {
  Graph g = testing::rose(2);
  Point u = canonical_point(Path(&g, 0), Path(&g, std::vector<int>{0}));
  testing::Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    BasicBisection bb = rng.basic(g, 2);
    AlgebraElement iv = indicator(CylSet({bb}));
    AlgebraElement ivinv = indicator(CylSet({inv_basic(bb)}));
    FiberVector x = random_vector(rng, g, u), y = random_vector(rng, g, u);
    CHECK(inner_product(regular_rep_apply(iv, x), y) ==
          inner_product(x, regular_rep_apply(ivinv, y)));
  }
}

TEST_CASE("regular representation is multiplicative") {
  std::vector<Graph> graphs{testing::rose(2),
                            Graph::parse("v v\nv w\ne e v w\ne f w v\ne l v v\n")};
  testing::Rng rng(54);
  for (int t = 0; t < 300; ++t) {
    const Graph& g = graphs[t % graphs.size()];
    Point u = canonical_point(Path(&g, 0), cycles_at(g, 0, 2).front());
    AlgebraElement f = rng.element(g, 2, 2), h = rng.element(g, 2, 2);
    FiberVector x = random_vector(rng, g, u);
    CHECK(regular_rep_apply(mul(f, h), x) ==
          regular_rep_apply(f, regular_rep_apply(h, x)));
  }
}

TEST_CASE("nonzero detection through the regular representation") {
  Graph g = testing::rose(2);
  testing::Rng rng(55);
  for (int t = 0; t < 500; ++t) {
    AlgebraElement f = rng.element(g, rng.geti(1, 3), 2);
    bool witnessed = false;
    AlgebraElement ff = mul(star(f), f);
    for (const auto& [key, c] : f.terms()) {
      auto [conn, cyc] = reach_cycle(g, key.nu().source_vertex());
      Point u = canonical_point(compose_paths(key.nu(), conn), cyc);
      GaussianRational q =
          inner_product(regular_rep_apply(ff, FiberVector::delta(u)), FiberVector::delta(u));
      CHECK(q.im == Rational(0));
      if (q.re > 0) witnessed = true;
    }
    CHECK(witnessed == !f.is_zero());
  }
}
