#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sta/deaconu_renault.hpp"
#include "sta/errors.hpp"
#include "sta/io.hpp"

using namespace sta;

namespace {

Sft full2() {
  return Sft({"a", "b"}, {{true, true}, {true, true}});
}

// Edge shift of a graph: letters are edges, xy admissible iff s(x) = r(y).
Sft edge_shift(const Graph& g) {
  std::vector<std::string> alpha;
  for (int e = 0; e < g.edge_count(); ++e) alpha.push_back(g.edge(e).id);
  std::vector<std::vector<bool>> allow(g.edge_count(),
                                       std::vector<bool>(g.edge_count(), false));
  for (int x = 0; x < g.edge_count(); ++x)
    for (int y = 0; y < g.edge_count(); ++y) allow[x][y] = g.source(x) == g.range(y);
  return Sft(alpha, allow);
}

Word word_of(const Path& p) { return p.edges(); }

DrBasic inverse_of(const DrBasic& d) { return {d.v, d.u, d.l, d.k}; }

}  // namespace

TEST_CASE("sft parsing and surjectivity") {
  Sft s = full2();
  CHECK(s.letter_count() == 2);
  CHECK(Sft::parse(s.print()).print() == s.print());
  CHECK(s.letter_index("b") == 1);
  CHECK_THROWS_AS(s.letter_index("c"), UnknownSymbol);
  // A letter with no admissible successor breaks surjectivity of the shift.
  CHECK_THROWS_AS(Sft({"a", "b"}, {{true, true}, {false, false}}), DomainError);
  CHECK_THROWS_AS(Sft::parse("alphabet a a\nallow a a\n"), DuplicateId);
}

TEST_CASE("validation of basic sets") {
  Sft s = full2();
  CHECK_THROWS_AS(dr_validate(parse_wordset("[a]", s), parse_wordset("[b]", s), 1, 0),
                  ImageMismatch);
  DrBasic d = dr_validate(parse_wordset("[a.b]", s), parse_wordset("[b]", s), 1, 0);
  CHECK(d.cocycle() == 1);
  DrBasic unit = dr_validate(parse_wordset("[a]", s), parse_wordset("[a]", s), 0, 0);
  CHECK(unit.cocycle() == 0);
  // A shift power beyond the word length merges distinct cylinders.
  CHECK_THROWS_AS(
      dr_validate(parse_wordset("[a.a]u[b.a]", s), parse_wordset("[a]u[b]", s), 2, 1),
      NotInjective);
}

TEST_CASE("composition of basic sets") {
  Sft s = full2();
  auto D = [&](const std::string& t) { return parse_dr_basic(t, s); };

  auto p = dr_mul(D("Z([a.b],[b],1,0)"), D("Z([b],[a.b],0,1)"));
  REQUIRE(p.size() == 1);
  CHECK(p[0].str() == "Z([a.b],[a.b],1,1)");

  auto q = dr_mul(D("Z([a.b],[a.b],0,0)"), D("Z([a.b],[b],1,0)"));
  REQUIRE(q.size() == 1);
  CHECK(dr_image(q[0].u, q[0].k) == dr_image(q[0].v, q[0].l));
  CHECK(q[0].u == parse_wordset("[a.b]", s));
  CHECK(q[0].v == parse_wordset("[b]", s));
  CHECK(q[0].cocycle() == 1);

  CHECK(dr_mul(D("Z([a.b],[b],1,0)"), D("Z([a.a],[a],1,0)")).empty());
}

TEST_CASE("outputs revalidate and the cocycle is additive") {
  Graph g = testing::rose(2);
  Sft s = edge_shift(g);
  testing::Rng rng(71);
  int done = 0;
  while (done < 200) {
    Path m1 = rng.path(g, 3), n1 = rng.path(g, 3);
    Path m2 = rng.path(g, 3), n2 = rng.path(g, 3);
    if (m1.empty() || n1.empty() || m2.empty() || n2.empty()) continue;
    DrBasic a = dr_validate(WordSet(&s, {word_of(m1)}), WordSet(&s, {word_of(n1)}),
                            m1.length(), n1.length());
    DrBasic b = dr_validate(WordSet(&s, {word_of(m2)}), WordSet(&s, {word_of(n2)}),
                            m2.length(), n2.length());
    auto prod = dr_mul(a, b);
    ++done;
    for (const DrBasic& piece : prod) {
      DrBasic again = dr_validate(piece.u, piece.v, piece.k, piece.l);
      CHECK(again.str() == piece.str());
      CHECK(piece.cocycle() == a.cocycle() + b.cocycle());
    }
  }
}

TEST_CASE("translation to the graph model") {
  Graph g = testing::rose(2);
  Sft s = edge_shift(g);
  auto D = [&](const std::string& t) { return parse_dr_basic(t, s); };

  CHECK(print_cylset(dr_to_graph(D("Z([a.b],[b],1,0)"), g)) == "{[a.b|b]}");
  CHECK(print_cylset(dr_to_graph(D("Z([a],[a],0,0)"), g)) == "{[a|a]}");

  Sft other = Sft({"x", "y"}, {{true, true}, {true, true}});
  CHECK_THROWS_AS(dr_to_graph(dr_validate(parse_wordset("[x]", other),
                                          parse_wordset("[x]", other), 0, 0),
                              g),
                  NotEdgeShift);
}

TEST_CASE("translation intertwines the operations") {
  // Over the edge shift of every small test graph, the graph-model image of
  // a product/inverse equals the product/inverse of the images.
  std::vector<Graph> graphs{testing::rose(2),
                            Graph::parse("v v\nv w\ne e v w\ne f w v\n"),
                            Graph::parse("v v\nv w\ne e v w\ne f w v\ne l v v\n"),
                            Graph::parse("v v\nv w\ne e v w\ne f w v\ne l v v\ne m w w\n")};
  for (const Graph& g : graphs) {
    Sft s = edge_shift(g);
    auto family = testing::separating_elements(g, 3);
    std::vector<DrBasic> basics;
    std::vector<BasicBisection> images;
    for (const Path& mu : all_paths_up_to(g, 3))
      for (const Path& nu : all_paths_up_to(g, 3)) {
        if (mu.empty() || nu.empty()) continue;
        if (mu.source_vertex() != nu.source_vertex()) continue;
        basics.push_back(dr_validate(WordSet(&s, {word_of(mu)}),
                                     WordSet(&s, {word_of(nu)}), mu.length(),
                                     nu.length()));
        images.emplace_back(mu, nu);
      }
    auto agrees = [&](const std::vector<BasicBisection>& lhs,
                      const std::vector<BasicBisection>& rhs) {
      for (const auto& e : family) {
        bool in_l = false, in_r = false;
        for (const auto& b : lhs) in_l = in_l || testing::member_oracle(e, b);
        for (const auto& b : rhs) in_r = in_r || testing::member_oracle(e, b);
        if (in_l != in_r) return false;
      }
      return true;
    };
    for (size_t i = 0; i < basics.size(); ++i) {
      CHECK(agrees(dr_to_graph(inverse_of(basics[i]), g).members(),
                   {inv_basic(images[i])}));
      CHECK(basics[i].cocycle() == images[i].degree());
      for (size_t j = 0; j < basics.size(); ++j) {
        std::vector<BasicBisection> via_dr;
        for (const DrBasic& piece : dr_mul(basics[i], basics[j])) {
          CylSet img = dr_to_graph(piece, g);
          via_dr.insert(via_dr.end(), img.members().begin(), img.members().end());
        }
        std::vector<BasicBisection> via_graph;
        if (auto p = mul_basic(images[i], images[j])) via_graph.push_back(*p);
        CHECK(agrees(via_dr, via_graph));
      }
    }
  }
}
