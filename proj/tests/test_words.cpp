#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"
#include "fpg/word_table.hpp"

using namespace fpg;
using fpg::testing::random_word;

namespace {
// Generator order in the lattice presentation: z = 0, b = 1.
constexpr Letter z = gen(0), Z = inv(0), b = gen(1), B = inv(1);
}  // namespace

TEST_CASE("parse the lattice presentation") {
  Presentation p = fpg::testing::gamma_bar();
  CHECK(p.generator_names() == std::vector<std::string>{"z", "b"});
  REQUIRE(p.relators().size() == 8);
  CHECK(p.relators()[0] == Word{z, z, z, z, z, z, z});
  CHECK(p.relators()[4] == Word{b, b, b, Z, Z, B, z, z, B, B, z});
}

TEST_CASE("parse small presentations") {
  auto free = parse_presentation("< a | >");
  CHECK(free.generator_count() == 1);
  CHECK(free.relators().empty());

  auto cyclic = parse_presentation("< z | z^7 >");
  REQUIRE(cyclic.relators().size() == 1);
  CHECK(cyclic.relators()[0] == Word(std::vector<Letter>(7, gen(0))));

  auto trivial = parse_presentation("< | >");
  CHECK(trivial.generator_count() == 0);

  SUBCASE("multi-character names and explicit products") {
    auto p = parse_presentation("<x1, y_2 | x1 y_2 x1^-1, (x1*y_2)^2>");
    CHECK(p.relators()[0] == Word{gen(0), gen(1), inv(0)});
    CHECK(p.relators()[1].size() == 4);
  }
  SUBCASE("zero exponent on a subword drops the relator") {
    auto p = parse_presentation("< a, b | (a*b)^0, a^2 >");
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0] == Word{gen(0), gen(0)});
  }
  SUBCASE("relators are freely reduced") {
    auto p = parse_presentation("< a, b | a b b^-1 a >");
    CHECK(p.relators()[0] == Word{gen(0), gen(0)});
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("< a, b |\n  a^2, b^^3 >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
  try {
    parse_presentation("< a | a*c >");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).find("unknown generator 'c'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation("< a, a | >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^2"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^2 > trailing"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | (a >"), ParseError);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(Word{b, B}).empty());
  CHECK(free_reduce(Word{z, b, B, Z, z}) == Word{z});
  // g5 * g1^-1 = (z b^-1 z^-2 b)(b^-3)
  Word g5{z, B, Z, Z, b};
  Word g1_inv{B, B, B};
  CHECK(concat(g5, g1_inv) == Word{z, B, Z, Z, B, B});
}

TEST_CASE("inverse, concatenation, power") {
  CHECK(invert(Word{z, b}) == Word{B, Z});
  Presentation p = fpg::testing::gamma_bar();
  CHECK(power(Word{b, b, Z}, 3) == p.relators()[1]);
  CHECK(power(Word{z, b}, 0).empty());
  CHECK(power(Word{z, b}, -2) == Word{B, Z, B, Z});
  CHECK(cyclic_reduce(Word{b, z, z, B}) == Word{z, z});
}

TEST_CASE("formatting collapses runs") {
  std::vector<std::string> names{"z", "b"};
  CHECK(format_word(Word{b, b, b, Z, Z, b}, names) == "b^3*z^-2*b");
  CHECK(format_word(Word{}, names) == "1");
}

TEST_CASE("free-group properties on random words") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, 3, 20);
    Word r = free_reduce(w);
    CHECK(r.is_reduced());
    CHECK(free_reduce(r) == r);
    CHECK(concat(w, invert(w)).empty());
    std::uniform_int_distribution<int> e(-8, 8);
    int m = e(rng), n = e(rng);
    CHECK(power(w, m + n) == concat(power(w, m), power(w, n)));
  }
}

TEST_CASE("parse/format round trip on random presentations") {
  std::mt19937 rng(7);
  const std::vector<std::string> pool{"a", "b", "x1", "gen_2", "T"};
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> ng(0, pool.size()), nr(0, 6);
    std::vector<std::string> names(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ng(rng)));
    std::vector<Word> rels;
    if (!names.empty()) {
      const std::size_t k = nr(rng);
      for (std::size_t i = 0; i < k; ++i)
        rels.push_back(random_word(rng, static_cast<std::uint32_t>(names.size()), 15));
    }
    Presentation p(names, rels);
    CHECK(parse_presentation(format_presentation(p)) == p);
  }
}

TEST_CASE("word table expansion") {
  auto words = fpg::testing::paper_words();
  const auto& t = words.table;
  CHECK(t.expand("g4") == Word{z, b, Z, B, z});
  // The first two sigma words, g4 and g5*g1^-1.
  CHECK(words.sigma[0] == Word{z, b, Z, B, z});
  CHECK(words.sigma[1] == Word{z, B, Z, Z, B, B});
  CHECK(words.pi.size() == 6);
  CHECK(words.sigma.size() == 10);
  for (std::size_t i = 0; i < 6; ++i) CHECK(t.expand("g" + std::to_string(i + 1)) == words.pi[i]);
}

TEST_CASE("word table errors") {
  WordTable t(parse_presentation("< a, b | >"));
  t.define("e", "");
  CHECK(t.expand("e").empty());
  t.define("x", "a*b");
  t.define("y", "x^2*a^-1");
  CHECK(t.expand("y") == Word{gen(0), gen(1), gen(0), gen(1), inv(0)});

  CHECK_THROWS_AS(t.expand("nope"), WordTableError);
  t.define("p", "q*a");
  CHECK_THROWS_AS(t.expand("p"), WordTableError);  // q undefined
  t.define("q", "p^-1");
  CHECK_THROWS_WITH_AS(t.expand("p"), doctest::Contains("cyclic"), WordTableError);
  CHECK_THROWS_AS(t.define("a", "b"), WordTableError);
  CHECK_THROWS_AS(t.define("x", "b"), WordTableError);
}

TEST_CASE("words files") {
  WordTable t(parse_presentation("< a, b | >"));
  auto ids = t.load("# comment\nu = a^2   # trailing\n\nu*b\nv = \n", "f.words");
  REQUIRE(ids.size() == 3);
  CHECK(t.entries()[ids[1]].name.empty());
  CHECK(t.expand_entry(ids[1]) == Word{gen(0), gen(0), gen(1)});
  CHECK(t.expand("v").empty());
  try {
    t.load("w = a\nw2 = later*a\n");
    FAIL("forward reference accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}
