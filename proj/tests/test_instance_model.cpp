#include <algorithm>
#include <random>

#include "ccol/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ccol;

namespace {

EdgeColouring two_vertex(Colour c) {
  EdgeColouring g(2);
  g.set_colour(0, 1, c);
  return g;
}

}  // namespace

TEST_CASE("feasible_3cc on tiny instances") {
  const EdgeColouring g = two_vertex(Colour::R);
  CHECK_FALSE(feasible_3cc(g, {Colour::R, Colour::R}));
  CHECK(feasible_3cc(g, {Colour::G, Colour::G}));
  CHECK(feasible_3cc(g, {Colour::R, Colour::G}));

  EdgeColouring h(3);
  h.set_colour(0, 1, Colour::R);
  h.set_colour(1, 2, Colour::R);
  h.set_colour(0, 2, Colour::B);
  CHECK_FALSE(feasible_3cc(h, {Colour::B, Colour::R, Colour::B}));

  CHECK_THROWS_AS(feasible_3cc(g, {Colour::R}), contract_error);
}

TEST_CASE("feasible_3cc is invariant under simultaneous relabeling") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + int(rng() % 7);
    const EdgeColouring g = test::random_instance(n, rng);
    VertexColouring phi(n);
    for (int v = 0; v < n; ++v) phi[v] = static_cast<Colour>(rng() % 3);

    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeColouring g2(n);
    VertexColouring phi2(n);
    for (int u = 0; u < n; ++u) {
      phi2[perm[u]] = phi[u];
      for (int v = u + 1; v < n; ++v) g2.set_colour(perm[u], perm[v], g.colour(u, v));
    }
    CHECK(feasible_3cc(g, phi) == feasible_3cc(g2, phi2));
  }
}

TEST_CASE("constant colouring is feasible iff its colour is absent from the edges") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + int(rng() % 6);
    const EdgeColouring g = test::random_instance(n, rng);
    for (Colour c : kColours) {
      bool appears = false;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) appears = appears || g.colour(u, v) == c;
      CHECK(feasible_3cc(g, VertexColouring(n, c)) == !appears);
    }
  }
}

TEST_CASE("feasible_stubborn") {
  SUBCASE("edge conditions apply only to edges") {
    StubbornInstance inst(2);
    CHECK(feasible_stubborn(inst, {1, 1}));
    CHECK_FALSE(feasible_stubborn(inst, {4, 4}));  // not a clique
  }
  SUBCASE("forbidden edge value sets") {
    StubbornInstance inst(2);
    inst.add_edge(0, 1);
    inst.set_list(0, 0b0101);  // {1,3}
    inst.set_list(1, 0b0101);
    CHECK_FALSE(feasible_stubborn(inst, {1, 3}));
    CHECK_FALSE(feasible_stubborn(inst, {3, 1}));
    CHECK_FALSE(feasible_stubborn(inst, {1, 1}));
    CHECK(feasible_stubborn(inst, {3, 3}));
  }
  SUBCASE("lists are enforced") {
    StubbornInstance inst(1);
    inst.set_list(0, 0b1000);  // {4}
    CHECK(feasible_stubborn(inst, {4}));
    CHECK_FALSE(feasible_stubborn(inst, {1}));
  }
}

TEST_CASE("parse_3cc basics") {
  const Instance3cc inst = parse_3cc("p 3cc 2\ne 0 1 R\n");
  CHECK(inst.graph.vertex_count() == 2);
  CHECK(inst.graph.colour(0, 1) == Colour::R);
  CHECK(inst.lists == ColourLists(2, ColourSet::full()));
  CHECK_FALSE(inst.restricted());
}

TEST_CASE("parse_3cc accepts comments and lists") {
  const Instance3cc inst = parse_3cc(
      "c a comment\n"
      "p 3cc 3\n"
      "e 0 1 R\n"
      "l 2 RB\n"
      "e 0 2 G\n"
      "c another\n"
      "e 1 2 B\n"
      "l 0\n");
  CHECK(inst.graph.colour(1, 2) == Colour::B);
  CHECK(inst.lists[0] == ColourSet::none());
  CHECK(inst.lists[1] == ColourSet::full());
  CHECK(inst.lists[2] == ColourSet::of(Colour::R, Colour::B));
  CHECK(inst.restricted());
}

TEST_CASE("parse_3cc malformed inputs") {
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\n"), doctest::Contains("incomplete graph"),
                       parse_error);
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\ne 0 1 R\ne 0 1 G\n"),
                       doctest::Contains("duplicate edge"), parse_error);
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\ne 1 1 R\n"), doctest::Contains("self-loop"),
                       parse_error);
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\ne 1 0 R\n"), doctest::Contains("u < v"),
                       parse_error);
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\ne 0 1 X\n"),
                       doctest::Contains("unknown colour letter"), parse_error);
  CHECK_THROWS_WITH_AS(parse_3cc("p 3cc 2\ne 0 2 R\n"), doctest::Contains("out of range"),
                       parse_error);
  CHECK_THROWS_AS(parse_3cc("p 3cc 2\ne 0 1 R\nl 0 RR\n"), parse_error);
  CHECK_THROWS_AS(parse_3cc("p 3cc 2\ne 0 1 R\nl 0 RB\nl 0 G\n"), parse_error);
  CHECK_THROWS_AS(parse_3cc("q 3cc 2\n"), parse_error);
  CHECK_THROWS_AS(parse_3cc(""), parse_error);
}

TEST_CASE("parse_stubborn basics and errors") {
  const StubbornInstance inst = parse_stubborn("p stubborn 2 1\ne 0 1\nl 0 13\n");
  CHECK(inst.vertex_count() == 2);
  CHECK(inst.has_edge(0, 1));
  CHECK(inst.list(0) == 0b0101);
  CHECK(inst.list(1) == kFullStubbornList);

  CHECK_THROWS_WITH_AS(parse_stubborn("p stubborn 1 0\nl 0 5\n"),
                       doctest::Contains("value outside 1..4"), parse_error);
  CHECK_THROWS_AS(parse_stubborn("p stubborn 2 2\ne 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_stubborn("p stubborn 2 1\ne 0 1\ne 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_stubborn("p stubborn 2 0\ne 0 1\n"), parse_error);
}

TEST_CASE("3cc round trip is identity and serialization is canonical") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    const int n = int(rng() % 8);
    Instance3cc inst{test::random_instance(n, rng), ColourLists(n, ColourSet::full())};
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) inst.lists[v] = ColourSet::from_mask(std::uint8_t(rng() % 8));
    const std::string text = serialize_3cc(inst);
    CHECK(parse_3cc(text) == inst);
    CHECK(serialize_3cc(parse_3cc(text)) == text);
  }

  // Edge order in the input is free; the serialized form is row-major.
  const std::string scrambled = "p 3cc 3\ne 1 2 B\ne 0 2 G\ne 0 1 R\n";
  CHECK(serialize_3cc(parse_3cc(scrambled)) == "p 3cc 3\ne 0 1 R\ne 0 2 G\ne 1 2 B\n");
}

TEST_CASE("stubborn round trip is identity") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 30; ++round) {
    const int n = int(rng() % 8);
    const StubbornInstance inst = test::random_stubborn(n, 0.4, rng);
    const std::string text = serialize_stubborn(inst);
    CHECK(parse_stubborn(text) == inst);
    CHECK(serialize_stubborn(parse_stubborn(text)) == text);
  }
}

TEST_CASE("solution file round trips") {
  const std::optional<VertexColouring> sat = VertexColouring{Colour::R, Colour::B};
  CHECK(serialize_3cc_solution(sat) == "s SAT\nv 0 R\nv 1 B\n");
  CHECK(parse_3cc_solution(serialize_3cc_solution(sat)) == sat);
  CHECK(parse_3cc_solution("s UNSAT\n") == std::nullopt);
  CHECK(serialize_3cc_solution(std::nullopt) == "s UNSAT\n");

  const std::optional<StubbornColouring> st = StubbornColouring{4, 1, 3};
  CHECK(serialize_stubborn_solution(st) == "s SAT\nv 0 4\nv 1 1\nv 2 3\n");
  CHECK(parse_stubborn_solution(serialize_stubborn_solution(st)) == st);

  CHECK_THROWS_AS(parse_3cc_solution("s MAYBE\n"), parse_error);
  CHECK_THROWS_AS(parse_3cc_solution("s SAT\nv 0 R\nv 0 G\n"), parse_error);
  CHECK_THROWS_AS(parse_3cc_solution("s SAT\nv 1 R\n"), parse_error);
  CHECK_THROWS_AS(parse_stubborn_solution("s SAT\nv 0 7\n"), parse_error);
}
