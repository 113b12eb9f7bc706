#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "oracle.hpp"
#include "vc/count.hpp"
#include "vc/error.hpp"
#include "vc/sampling.hpp"

using namespace vc;
using testing::element;

TEST_CASE("evaluate_word on Q8") {
  GroupTable q = group_from_name("Q8");
  std::vector<Element> t{element(q, "i"), element(q, "j")};
  CHECK(evaluate_word(q, parse_word("[x1,x2]"), t) == element(q, "-1"));
  CHECK(evaluate_word(q, parse_word("x1 x2"), t) == element(q, "k"));
  CHECK(evaluate_word(q, parse_word("x2 x1"), t) == element(q, "-k"));
  CHECK(evaluate_word(q, parse_word("x1^-5", 2), t) == element(q, "-i"));
  CHECK(evaluate_word(q, Word::identity(2), t) == 0);
  CHECK_THROWS_AS(evaluate_word(q, parse_word("x3"), t), InputError);
}

TEST_CASE("count examples") {
  GroupTable q = group_from_name("Q8");
  CountResult r = count_solutions(q, parse_word("[x1,x2]"));
  CHECK(r.count == 40);
  CHECK(r.bound == 8);
  CHECK(r.bound_ok);
  CHECK(r.search_space == 64);
  // Oracle: commuting pairs of the 2x2 matrix model.
  CHECK(r.count == oracle::commuting_pairs(oracle::quaternion_matrices()));

  CHECK(count_solutions(group_from_name("C2"), parse_word("x1^2")).count == 2);
  CountResult c2 = count_solutions(group_from_name("C2"), parse_word("x1"));
  CHECK(c2.count == 1);
  CHECK(c2.bound == 1);
  CHECK(c2.bound_ok);

  Word w = parse_word("x1^2 [x2,x3]");
  CountResult restricted = count_solutions(q, w, Restriction::derived_first(q, 3));
  CHECK(restricted.search_space == 2 * 8 * 8);
  CHECK(restricted.count == 80);
  // Oracle: x1 = +-1 squares to 1, so the count is 2 * #commuting pairs.
  CHECK(restricted.count == 2 * oracle::commuting_pairs(oracle::quaternion_matrices()));
}

TEST_CASE("fiber examples") {
  auto c4 = fiber_histogram(group_from_name("C4"), parse_word("x1^2"));
  std::vector<std::uint64_t> sorted(c4);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::uint64_t>{0, 0, 2, 2});

  GroupTable q = group_from_name("Q8");
  for (auto f : fiber_histogram(q, parse_word("x1"))) CHECK(f == 1);

  auto comm = fiber_histogram(q, parse_word("[x1,x2]"));
  CHECK(comm[0] == 40);
  CHECK(comm[element(q, "-1")] == 24);
  CHECK(std::accumulate(comm.begin(), comm.end(), std::uint64_t{0}) == 64);
}

TEST_CASE("counts match the matrix and permutation models") {
  Rng rng(31);
  struct Case {
    std::string name;
    oracle::Table model;
  };
  std::vector<Case> cases{{"Q8", oracle::quaternion_matrices()},
                          {"D4", oracle::square_symmetries()},
                          {"heisenberg(3)", oracle::unitriangular(3)},
                          {"C4xC2", oracle::residues({4, 2})}};
  for (const auto& c : cases) {
    GroupTable g = group_from_name(c.name);
    for (int i = 0; i < 25; ++i) {
      const int n = static_cast<int>(rng.range(1, c.name == "heisenberg(3)" ? 2 : 3));
      Word w = random_word(rng, n, 10);
      CAPTURE(format_word(w));
      CHECK(count_solutions(g, w).count == oracle::count(c.model, w));
    }
  }
}

TEST_CASE("EvalPlan agrees with evaluate_word") {
  Rng rng(32);
  GroupTable g = group_from_name("Q8xC2");
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 3, 14);
    EvalPlan plan(g, w);
    for (int s = 0; s < 50; ++s) {
      std::vector<Element> t;
      for (int k = 0; k < 3; ++k) t.push_back(static_cast<Element>(rng.below(g.order())));
      CHECK(plan(t) == evaluate_word(g, w, t));
    }
  }
}

TEST_CASE("counting does not depend on the worker count") {
  Rng rng(33);
  GroupTable g = group_from_name("heisenberg(3)");
  for (int i = 0; i < 10; ++i) {
    Word w = random_word(rng, 3, 12);
    std::uint64_t base = count_solutions(g, w, {.workers = 1}).count;
    for (unsigned k : {2u, 3u, 8u, 64u}) CHECK(count_solutions(g, w, {.workers = k}).count == base);
    auto f1 = fiber_histogram(g, w, {.workers = 1});
    CHECK(fiber_histogram(g, w, {.workers = 5}) == f1);
    CHECK(f1[0] == base);
  }
}

TEST_CASE("restrictions") {
  GroupTable q = group_from_name("Q8");
  Restriction r = parse_restriction("1:derived,3:center", q, 3);
  CHECK(r.masks[0] == q.derived());
  CHECK(r.masks[1].size() == 8);
  CHECK(r.masks[2] == q.center());
  CHECK(r.search_space() == 2 * 8 * 2);
  CHECK(parse_restriction("", q, 2).search_space() == 64);
  CHECK(parse_restriction("2:full", q, 2).search_space() == 64);
  CHECK_THROWS_AS(parse_restriction("4:full", q, 3), ParseError);
  CHECK_THROWS_AS(parse_restriction("1:half", q, 3), ParseError);
  CHECK_THROWS_AS(parse_restriction("derived", q, 3), ParseError);
  CHECK_THROWS_AS(count_solutions(q, parse_word("x1 x2"), Restriction::full(q, 3)), InputError);
}

TEST_CASE("enlarging a coordinate never decreases the count") {
  Rng rng(34);
  GroupTable g = group_from_name("D4xC2");
  const char* kinds[] = {"center", "derived", "full"};
  for (int i = 0; i < 20; ++i) {
    Word w = random_word(rng, 2, 10);
    for (int coord = 1; coord <= 2; ++coord) {
      // derived <= center <= full in a class-2 group.
      std::uint64_t a = count_solutions(g, w, parse_restriction(std::to_string(coord) + ":" + kinds[1], g, 2)).count;
      std::uint64_t b = count_solutions(g, w, parse_restriction(std::to_string(coord) + ":" + kinds[0], g, 2)).count;
      std::uint64_t c = count_solutions(g, w, parse_restriction(std::to_string(coord) + ":" + kinds[2], g, 2)).count;
      CHECK(a <= b);
      CHECK(b <= c);
    }
  }
}

TEST_CASE("evaluation cap") {
  GroupTable g = group_from_name("Q8xQ8");
  Word w = parse_word("x1 x2 x3 x4 x5");
  CHECK_THROWS_AS(count_solutions(g, w), CapExceeded);
  CHECK_THROWS_AS(count_solutions(group_from_name("Q8"), parse_word("[x1,x2]"), {.cap = 10}), CapExceeded);
  CHECK(count_solutions(group_from_name("Q8"), parse_word("[x1,x2]"), {.cap = 10, .force = true}).count == 40);
}

TEST_CASE("direct products multiply counts") {
  Rng rng(35);
  std::vector<std::pair<std::string, std::string>> pairs{{"C2", "C2"}, {"Q8", "C2"}, {"C3", "C3"}, {"D4", "C4"}};
  for (const auto& [a, b] : pairs) {
    GroupTable ga = group_from_name(a), gb = group_from_name(b);
    GroupTable ab = direct_product(ga, gb);
    for (int i = 0; i < 15; ++i) {
      Word w = random_word(rng, static_cast<int>(rng.range(1, 3)), 10);
      CAPTURE(format_word(w));
      CHECK(count_solutions(ab, w).count == count_solutions(ga, w).count * count_solutions(gb, w).count);
    }
  }
}

TEST_CASE("abelian groups have uniform nonzero fibers") {
  Rng rng(36);
  for (const auto& name : standard_catalog_names()) {
    GroupTable g = group_from_name(name);
    if (!g.is_abelian() || g.order() > 32) continue;
    for (int i = 0; i < 10; ++i) {
      const int n = static_cast<int>(rng.range(1, 3));
      Word w = random_word(rng, n, 10);
      auto f = fiber_histogram(g, w);
      std::uint64_t nonzero = 0;
      for (auto x : f)
        if (x) {
          if (!nonzero) nonzero = x;
          CHECK(x == nonzero);
        }
      CHECK(f[0] >= power_bound(g, n));
    }
  }
}

TEST_CASE("bound holds on the standard catalog") {
  Rng rng(37);
  for (const auto& name : standard_catalog_names()) {
    GroupTable g = group_from_name(name);
    const int max_n = g.order() <= 27 ? 3 : 2;
    for (int i = 0; i < 20; ++i) {
      Word w = random_word(rng, static_cast<int>(rng.range(1, max_n)), 12);
      CountResult r = count_solutions(g, w);
      CHECK_MESSAGE(r.bound_ok, name, " ", format_word(w));
    }
  }
}
