#include <doctest.h>

#include <random>

#include "hk/enumeration.hpp"
#include "hk/fixtures.hpp"
#include "hk/rewrite.hpp"

using namespace hk;

TEST_SUITE("rewrite") {

TEST_CASE("completion of a single idempotent") {
  RewriteSystem rs = rewrite_system_for(chain_graph(1));
  CHECK(rs.complete());
  REQUIRE(rs.rules().size() == 1);
  CHECK(rs.rules()[0].lhs == Word{0, 0});
  CHECK(rs.rules()[0].rhs == Word{0});
}

TEST_CASE("completion on the two-vertex chain") {
  RewriteSystem rs = rewrite_system_for(chain_graph(2));
  CHECK(rs.complete());
  // oracle congruence closure fixes the count at 5
  CHECK(enumerate_elements(rs, chain_graph(2), 100).size() == 5);
}

TEST_CASE("triangle: completion converges, the monoid does not") {
  // The 3-cycle presentation happens to complete (nine rules); infiniteness
  // shows up downstream: enumeration caps out and the oracle never
  // stabilizes, exactly as the distinct-powers lemma predicts.
  RewriteSystem rs = rewrite_system_for(triangle_graph());
  CHECK(rs.complete());
  CHECK_THROWS_AS(enumerate_elements(rs, triangle_graph(), 3000), Error);
  try {
    enumerate_elements(rs, triangle_graph(), 3000);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("limits yield a partial system") {
  CompletionLimits tight{3, 3};
  RewriteSystem rs =
      complete_presentation(relations_of(chain_graph(3)),
                            default_priority(chain_graph(3)), tight);
  CHECK_FALSE(rs.complete());
  CHECK_THROWS_AS(rs.normal_form({0}), Error);
  // the partial system still rewrites soundly
  CHECK(rs.reduce({0, 0}) == Word{0});
}

TEST_CASE("normal forms") {
  RewriteSystem chain = rewrite_system_for(chain_graph(2));
  CHECK(chain.normal_form({0, 0}) == Word{0});
  CHECK(chain.normal_form({0, 1, 0}) == chain.normal_form({0, 1}));

  RewriteSystem iso = rewrite_system_for(isolated_graph(2));
  CHECK(iso.normal_form({1, 0}) == Word{0, 1});

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, 1), len(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(letter(rng));
    Word nf = chain.normal_form(w);
    CHECK(chain.normal_form(nf) == nf);
  }
}

TEST_CASE("default priority follows the canonical order") {
  DirectedGraph g(3, {{0, 2}, {2, 1}});  // path 0-2-1
  CHECK(default_priority(g) == std::vector<int>{0, 2, 1});
  CHECK(default_priority(triangle_graph()) == std::vector<int>{0, 1, 2});
}

TEST_CASE("priority validation") {
  CHECK_THROWS_AS(
      complete_presentation(relations_of(chain_graph(2)), {0, 0}, {}), Error);
}

}  // TEST_SUITE
