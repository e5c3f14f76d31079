#include "ccol/generate.hpp"
#include "ccol/io.hpp"
#include "ccol/oracle.hpp"
#include "ccol/solver.hpp"
#include "doctest.h"

using namespace ccol;

TEST_CASE("splitmix64 reference values") {
  // The (index+1)-th output of the reference splitmix64 stream.
  CHECK(splitmix64_at(0, 0) == 0xe220a8397b1dcdafull);
  CHECK(splitmix64_at(0, 1) == 0x6e789e6aa1b965f4ull);
  CHECK(splitmix64_at(0, 2) == 0x06c45d188009454full);
  CHECK(splitmix64_at(42, 0) == 0xbdd732262feb6e95ull);
}

TEST_CASE("generation is deterministic with frozen bytes") {
  const GenSpec uniform{GenFamily::uniform3cc, 3, 0.5, 42};
  CHECK(gen_file(uniform) == "p 3cc 3\ne 0 1 G\ne 0 2 G\ne 1 2 R\n");
  CHECK(gen_file(uniform) == gen_file(uniform));

  const GenSpec planted{GenFamily::planted3cc, 3, 0.5, 7};
  CHECK(gen_file(planted) == "p 3cc 3\ne 0 1 B\ne 0 2 G\ne 1 2 B\n");

  const GenSpec stubborn{GenFamily::stubborn, 3, 0.5, 9};
  CHECK(gen_file(stubborn) == "p stubborn 3 1\ne 1 2\nl 0 24\nl 1 34\nl 2 1\n");
}

TEST_CASE("uniform3cc n=2 emits exactly one edge line") {
  const std::string text = gen_file(GenSpec{GenFamily::uniform3cc, 2, 0.5, 5});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind("p 3cc 2\ne 0 1 ", 0) == 0);
}

TEST_CASE("planted instances carry their witness") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Planted planted = gen_planted3cc(9, seed);
    CHECK(feasible_3cc(planted.graph, planted.hidden));
    CHECK(solve(planted.graph).sat());
  }
}

TEST_CASE("stubborn edge probability extremes") {
  const StubbornInstance none = gen_stubborn(6, 0.0, 3);
  CHECK(none.edges().empty());
  const StubbornInstance all = gen_stubborn(6, 1.0, 3);
  CHECK(all.edges().size() == 15);
  for (int v = 0; v < 6; ++v) CHECK(all.list(v) != 0);  // lists are nonempty subsets
  CHECK_THROWS_AS(gen_stubborn(3, 1.5, 0), contract_error);
}

TEST_CASE("generated files parse back to the generated instance") {
  const StubbornInstance inst = gen_stubborn(7, 0.4, 11);
  CHECK(parse_stubborn(gen_file(GenSpec{GenFamily::stubborn, 7, 0.4, 11})) == inst);
  const EdgeColouring g = gen_uniform3cc(7, 11);
  CHECK(parse_3cc(gen_file(GenSpec{GenFamily::uniform3cc, 7, 0.4, 11})).graph == g);
}
