#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "vc/error.hpp"
#include "vc/sampling.hpp"
#include "vc/words.hpp"

using namespace vc;

namespace {

LetterSeq seq(std::initializer_list<std::pair<int, int>> ls) {
  LetterSeq out;
  for (auto [v, s] : ls) out.push_back({v, s});
  return out;
}

}  // namespace

TEST_CASE("parse: single variable") {
  Word w = parse_word("x1");
  CHECK(w.kind() == NodeKind::Var);
  CHECK(w.root()->var == 1);
  CHECK(w.nvars() == 1);
}

TEST_CASE("parse: powered commutator") {
  Word w = parse_word("[x1,x2]^2");
  REQUIRE(w.kind() == NodeKind::Power);
  CHECK(w.root()->exponent == 2);
  REQUIRE(w.root()->children.size() == 1);
  const auto& c = w.root()->children[0];
  REQUIRE(c->kind == NodeKind::Commutator);
  CHECK(c->children[0]->var == 1);
  CHECK(c->children[1]->var == 2);
}

TEST_CASE("parse: negative power in a product") {
  Word w = parse_word("x3^-2 x1");
  CHECK(w.nvars() == 3);
  REQUIRE(w.kind() == NodeKind::Product);
  REQUIRE(w.root()->children.size() == 2);
  const auto& a = w.root()->children[0];
  CHECK(a->kind == NodeKind::Power);
  CHECK(a->exponent == -2);
  CHECK(a->children[0]->kind == NodeKind::Var);
  CHECK(a->children[0]->var == 3);
  CHECK(w.root()->children[1]->kind == NodeKind::Var);
  CHECK(w.root()->children[1]->var == 1);
}

TEST_CASE("parse: whitespace, nesting and the identity atom") {
  CHECK(parse_word("x1x2") == parse_word("x1 x2"));
  CHECK(parse_word(" [ x1 , x2 ] ^ 3 ") == parse_word("[x1,x2]^3"));
  CHECK(parse_word("((x1))") == parse_word("x1"));
  CHECK(parse_word("1", 2) == Word::identity(2));
  CHECK(parse_word("x1 1 x2") == parse_word("x1 x2"));
  CHECK(parse_word("x1", 3).nvars() == 3);
}

TEST_CASE("parse: errors carry a position") {
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x0"), ParseError);
  CHECK_THROWS_AS(parse_word("[x1 x2]"), ParseError);
  CHECK_THROWS_AS(parse_word("(x1"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^"), ParseError);
  CHECK_THROWS_AS(parse_word("x1 y2"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_word("x3", 2), ParseError);
  try {
    parse_word("x1 ]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("format: canonical rendering") {
  CHECK(format_word(parse_word("x1")) == "x1");
  CHECK(format_word(parse_word("x3^-2 x1")) == "x3^-2 x1");
  CHECK(format_word(parse_word("[x1,x2]^2")) == "[x1,x2]^2");
  CHECK(format_word(parse_word("(x1 x2)^2")) == "(x1 x2)^2");
  CHECK(format_word(Word::identity(2)) == "1");
  CHECK(format_word(Word::inverse(Word::var(1, 1))) == "x1^-1");
}

TEST_CASE("format/parse round trip on random words") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.range(1, 4));
    Word w = random_word(rng, n, 16);
    Word back = parse_word(format_word(w), n);
    CHECK(back == normalize(w));
    CHECK(format_word(back) == format_word(normalize(w)));
  }
}

TEST_CASE("flatten_reduce examples") {
  CHECK(flatten_reduce(parse_word("x1 x1^-1")).empty());
  CHECK(flatten_reduce(parse_word("x1 x2 x2^-1 x1")) == seq({{1, 1}, {1, 1}}));
  CHECK(flatten_reduce(parse_word("[x1,x1]")).empty());
  CHECK(flatten_reduce(parse_word("[x1,x2]")) == seq({{1, -1}, {2, -1}, {1, 1}, {2, 1}}));
  CHECK(flatten_reduce(parse_word("(x1 x2)^-2")) == seq({{2, -1}, {1, -1}, {2, -1}, {1, -1}}));
}

TEST_CASE("flatten_reduce respects the letter cap") {
  CHECK_THROWS_AS(flatten_reduce(parse_word("(x1 x2)^1000"), 100), CapExceeded);
  CHECK(flatten_reduce(parse_word("(x1 x2)^1000")).size() == 2000);
}

TEST_CASE("flatten_reduce agrees with naive expansion plus free reduction") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 3, 14);
    LetterSeq naive;
    for (auto [v, s] : oracle::letters(w)) naive.push_back({v, s});
    // Stack-based free reduction, written out here independently.
    LetterSeq reduced;
    for (const auto& l : naive) {
      if (!reduced.empty() && reduced.back().var == l.var && reduced.back().sign == -l.sign)
        reduced.pop_back();
      else
        reduced.push_back(l);
    }
    CHECK(flatten_reduce(w) == reduced);
    CHECK(free_reduce(naive) == reduced);
  }
}

TEST_CASE("substitute examples") {
  Word xy = parse_word("x1 x2");
  auto u = Substitution::of({parse_word("x1", 2), parse_word("x2 x1")});
  CHECK(flatten_reduce(substitute(xy, u)) == seq({{1, 1}, {2, 1}, {1, 1}}));

  auto v = Substitution::of({parse_word("x1", 2), parse_word("x1", 2)});
  CHECK(flatten_reduce(substitute(parse_word("[x1,x2]"), v)).empty());

  auto s = Substitution::of({parse_word("x1 x2"), parse_word("x2")});
  CHECK(flatten_reduce(substitute(parse_word("x1^2", 2), s)) == seq({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));

  CHECK_THROWS_AS(substitute(parse_word("x1 x2"), Substitution::of({parse_word("x1")})), InputError);
}

TEST_CASE("substitute is a homomorphism on concrete groups") {
  // eval(w(u), t) = eval(w, (u_1(t), ..., u_n(t))) on matrix models.
  Rng rng(13);
  for (const auto& table : {oracle::quaternion_matrices(), oracle::unitriangular(3), oracle::symmetric3()}) {
    for (int i = 0; i < 40; ++i) {
      const int n = static_cast<int>(rng.range(1, 3));
      Word w = random_word(rng, n, 8);
      std::vector<Word> images;
      for (int j = 0; j < n; ++j) images.push_back(random_word(rng, 2, 6));
      Substitution s = Substitution::of(images);
      auto composed = oracle::letters(substitute(w, s));
      auto outer = oracle::letters(w);
      oracle::for_each_tuple(table.n, 2, [&](const std::vector<int>& t) {
        std::vector<int> mapped;
        for (const auto& u : images) mapped.push_back(oracle::evaluate(table, oracle::letters(u), t));
        CHECK(oracle::evaluate(table, composed, t) == oracle::evaluate(table, outer, mapped));
      });
    }
  }
}

TEST_CASE("abelianized_exponents examples") {
  CHECK(abelianized_exponents(parse_word("x1 x2 x1 x2^-1")) == std::vector<std::int64_t>{2, 0});
  CHECK(abelianized_exponents(parse_word("[x1,x2]")) == std::vector<std::int64_t>{0, 0});
  CHECK(abelianized_exponents(parse_word("x1^2 x2^2 [x1,x2]^3")) == std::vector<std::int64_t>{2, 2});
  CHECK(abelianized_exponents(parse_word("(x1 x3^-1)^-4", 3)) == std::vector<std::int64_t>{-4, 0, 4});
}

TEST_CASE("abelianized_exponents sums letter signs") {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 3, 14);
    std::vector<std::int64_t> expect(3, 0);
    for (auto [v, s] : oracle::letters(w)) expect[static_cast<std::size_t>(v - 1)] += s;
    CHECK(abelianized_exponents(w) == expect);
  }
}

TEST_CASE("word construction checks arity") {
  CHECK_THROWS_AS(Word::var(2, 3), InputError);
  CHECK_THROWS_AS(Word::product({Word::var(1, 1), Word::var(2, 1)}), InputError);
  CHECK_THROWS_AS(Word::product({}), InputError);
  CHECK(parse_word("x1").with_nvars(4).nvars() == 4);
  CHECK_THROWS_AS(parse_word("x3").with_nvars(2), InputError);
  auto p = Substitution::permutation({2, 1});
  CHECK(flatten_reduce(substitute(parse_word("x1 x2^2"), p)) == seq({{2, 1}, {1, 1}, {1, 1}}));
}
