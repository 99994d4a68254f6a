#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "fpg/abelian.hpp"
#include "fpg/low_index.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/tietze.hpp"
#include "fpg/todd_coxeter.hpp"

using namespace fpg;

namespace {

using Perm = std::vector<std::uint32_t>;
using Action = std::vector<Perm>;

std::uint32_t apply(const Action& a, const Word& w, std::uint32_t x) {
  for (Letter l : w) {
    const Perm& p = a[l.gen];
    if (!l.inverse) {
      x = p[x];
    } else {
      x = static_cast<std::uint32_t>(std::find(p.begin(), p.end(), x) - p.begin());
    }
  }
  return x;
}

bool transitive(const Action& a, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const Perm& p : a) {
      for (std::uint32_t y : {p[x], static_cast<std::uint32_t>(std::find(p.begin(), p.end(), x) - p.begin())}) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == n;
}

// Smallest relabeling of an action over all of S_n.
Action canonical(const Action& a, std::size_t n) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0u);
  Action best;
  do {
    Action b(a.size(), Perm(n));
    for (std::size_t g = 0; g < a.size(); ++g)
      for (std::uint32_t x = 0; x < n; ++x) b[g][s[x]] = s[a[g][x]];
    if (best.empty() || b < best) best = b;
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

struct OracleCounts {
  std::size_t classes = 0;
  std::size_t subgroups = 0;
  std::size_t normal = 0;
  std::set<Action> forms;
};

// Transitive actions of degree n satisfying the relators, up to relabeling,
// are the conjugacy classes of index-n subgroups.
OracleCounts brute_force(const Presentation& p, std::size_t n) {
  std::vector<Perm> all;
  Perm s(n);
  std::iota(s.begin(), s.end(), 0u);
  do all.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));

  OracleCounts out;
  std::size_t based = 0;
  const std::size_t k = p.generator_count();
  std::vector<std::size_t> choice(k, 0);
  for (;;) {
    Action a;
    for (auto c : choice) a.push_back(all[c]);
    bool ok = transitive(a, n);
    for (const Word& r : p.relators()) {
      if (!ok) break;
      for (std::uint32_t x = 0; x < n && ok; ++x) ok = apply(a, r, x) == x;
    }
    if (ok) {
      ++based;
      out.forms.insert(canonical(a, n));
    }
    std::size_t i = 0;
    while (i < k && ++choice[i] == all.size()) choice[i++] = 0;
    if (i == k) break;
  }
  out.classes = out.forms.size();
  std::size_t factorial = 1;
  for (std::size_t i = 2; i < n; ++i) factorial *= i;
  out.subgroups = based / factorial;
  for (const Action& f : out.forms) {
    Perm s2(n);
    std::iota(s2.begin(), s2.end(), 0u);
    // The point stabilizer is normal iff the image acts regularly, i.e.
    // has order exactly n.
    std::set<Perm> group{s2};
    std::vector<Perm> frontier{s2};
    while (!frontier.empty() && group.size() <= n) {
      Perm x = frontier.back();
      frontier.pop_back();
      for (const Perm& g : f) {
        Perm y(n);
        for (std::uint32_t i = 0; i < n; ++i) y[i] = g[x[i]];
        if (group.insert(y).second) frontier.push_back(y);
      }
    }
    if (group.size() == n) ++out.normal;
  }
  return out;
}

Action action_of(const CosetTable& t) {
  Action a;
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
    Perm p;
    for (Coset c = 0; c < t.index(); ++c) p.push_back(t.act(c, gen(g)));
    a.push_back(p);
  }
  return a;
}

struct Named {
  const char* name;
  const char* text;
  std::size_t max_index;
};

const Named kSmall[] = {
    {"free group of rank 2", "< a, b | >", 4},
    {"modular group", "< a, b | a^2, b^3 >", 5},
    {"S3", "< a, b | a^2, b^3, (a*b)^2 >", 5},
    {"A4", "< a, b | a^2, b^3, (a*b)^3 >", 5},
    {"D8", "< a, b | a^4, b^2, (a*b)^2 >", 5},
    {"Q8", "< a, b | a^4, a^2*b^-2, b^-1*a*b*a >", 5},
    {"Z x Z", "< a, b | a^-1*b^-1*a*b >", 5},
    {"Z7", "< z | z^7 >", 5},
};

}  // namespace

TEST_CASE("low-index search matches the brute-force action oracle") {
  for (const auto& [name, text, max_index] : kSmall) {
    CAPTURE(name);
    const Presentation p = parse_presentation(text);
    auto all = low_index_subgroups(p, {.max_index = max_index});
    CHECK(all.complete);
    auto normal = low_index_subgroups(p, {.max_index = max_index, .normal_only = true});
    for (std::size_t n = 1; n <= max_index; ++n) {
      CAPTURE(n);
      const OracleCounts oracle = brute_force(p, n);
      std::set<Action> mine;
      std::size_t normal_count = 0;
      for (const auto& t : all.classes)
        if (t.index() == n) mine.insert(canonical(action_of(t), n));
      for (const auto& t : normal.classes)
        if (t.index() == n) ++normal_count;
      CHECK(mine == oracle.forms);
      CHECK(normal_count == oracle.normal);
      auto exact = low_index_subgroups(p, {.max_index = max_index, .exact_index = n});
      CHECK(exact.classes.size() == oracle.classes);
    }
  }
}

TEST_CASE("known class counts") {
  // Conjugacy classes of subgroups of index 1..4 in F2: 1, 3, 7, 26.
  auto f2 = low_index_subgroups(parse_presentation("< a, b | >"), {.max_index = 4});
  std::vector<std::size_t> per_index(5, 0);
  for (const auto& t : f2.classes) ++per_index[t.index()];
  CHECK(per_index == std::vector<std::size_t>{0, 1, 3, 7, 26});

  auto z7 = low_index_subgroups(parse_presentation("< z | z^7 >"), {.max_index = 7});
  CHECK(z7.classes.size() == 2);
}

TEST_CASE("returned tables are canonical, sorted and re-enumerable") {
  for (const auto& [name, text, max_index] : kSmall) {
    CAPTURE(name);
    const Presentation p = parse_presentation(text);
    auto res = low_index_subgroups(p, {.max_index = max_index});
    CHECK(std::is_sorted(res.classes.begin(), res.classes.end(), [](const auto& a, const auto& b) {
      return a.index() != b.index() ? a.index() < b.index() : a.entries() < b.entries();
    }));
    auto normal = low_index_subgroups(p, {.max_index = max_index, .normal_only = true});
    for (const auto& t : normal.classes) {
      CHECK(is_normal(t));
      CHECK(std::find(res.classes.begin(), res.classes.end(), t) != res.classes.end());
    }
    for (const auto& t : res.classes) {
      CHECK(t.is_standard());
      CHECK(satisfies(t, p));
      auto again = todd_coxeter(p, t.subgroup_generators());
      CHECK(again == t);
      // Conjugates are not listed twice.
      for (Coset c = 1; c < t.index(); ++c) {
        auto reps = representatives(t);
        std::vector<Word> conj;
        for (const auto& w : t.subgroup_generators()) conj.push_back(concat(concat(invert(reps[c]), w), reps[c]));
        auto other = todd_coxeter(p, conj);
        if (other != t) CHECK(std::find(res.classes.begin(), res.classes.end(), other) == res.classes.end());
      }
    }
  }
}

TEST_CASE("node budget stops the search") {
  auto res = low_index_subgroups(parse_presentation("< a, b | >"), {.max_index = 4, .node_budget = 20});
  CHECK_FALSE(res.complete);
  CHECK(res.nodes <= 20);
}

TEST_CASE("search options are validated") {
  const Presentation p = parse_presentation("< a | a^3 >");
  CHECK_THROWS_AS(low_index_subgroups(p, {.max_index = 0}), std::invalid_argument);
  CHECK_THROWS_AS(low_index_subgroups(p, {.max_index = 2, .exact_index = 3}), std::invalid_argument);
  CHECK_THROWS_AS(low_index_subgroups(p, {.max_index = 2, .exact_index = 0}), std::invalid_argument);
  CHECK(low_index_subgroups(parse_presentation("< | >"), {.max_index = 3}).classes.size() == 1);
}

TEST_CASE("classes containing nothing, or the generator of Z7") {
  auto z7 = parse_presentation("< z | z^7 >");
  auto res = low_index_subgroups(z7, {.max_index = 7});
  CHECK(classes_containing(z7, res.classes, {}).size() == res.classes.size());
  const std::vector<Word> z{Word{gen(0)}};
  auto hits = classes_containing(z7, res.classes, z);
  REQUIRE(hits.size() == 1);
  CHECK(res.classes[hits[0]].index() == 1);
}

TEST_CASE("abelian-quotient fast path agrees with the search") {
  for (const auto& [name, text, max_index] : kSmall) {
    CAPTURE(name);
    const Presentation p = parse_presentation(text);
    for (std::size_t n : {1, 2, 3, 4}) {
      if (n > max_index) continue;
      CAPTURE(n);
      auto search = low_index_subgroups(p, {.max_index = n, .exact_index = n, .normal_only = true});
      auto fast = normal_subgroups_abelian_quotient(p, n);
      // Every group of order at most 4 is abelian.
      CHECK(fast == search.classes);
    }
  }
}

TEST_CASE("classes containing given words") {
  const Presentation s3 = parse_presentation("< a, b | a^2, b^3, (a*b)^2 >");
  auto res = low_index_subgroups(s3, {.max_index = 6});
  const std::vector<Word> b{Word{gen(1)}};
  auto hits = classes_containing(s3, res.classes, b);
  // The whole group and A3 contain b; no index-3 or regular class does.
  REQUIRE(hits.size() == 2);
  CHECK(res.classes[hits[0]].index() == 1);
  CHECK(res.classes[hits[1]].index() == 2);
}

TEST_CASE("normal index-4 subgroups of the index-21 subgroup") {
  const Presentation g = fpg::testing::gamma_bar();
  auto words = fpg::testing::paper_words();
  ReidemeisterSchreier pi(g, todd_coxeter(g, words.pi));
  const TietzeResult small = eliminate_generators(pi.presentation());
  const Presentation& pp = small.presentation;
  CHECK(pp.generator_count() == 4);

  auto fast = normal_subgroups_abelian_quotient(pp, 4);
  // Index-4 subgroups of Z2^4: 35.
  CHECK(fast.size() == 35);

  std::vector<Word> sigma_in_pi;
  for (const auto& w : words.sigma) sigma_in_pi.push_back(map_word(small, pi.rewrite(w)));
  auto hits = classes_containing(pp, fast, sigma_in_pi);
  REQUIRE(hits.size() == 1);
  CHECK(fast[hits[0]] == todd_coxeter(pp, sigma_in_pi));

  auto search = low_index_subgroups(pp, {.max_index = 4, .exact_index = 4, .normal_only = true});
  CHECK(search.complete);
  CHECK(search.classes == fast);
  // No index-3 subgroups at all.
  CHECK(low_index_subgroups(pp, {.max_index = 3, .exact_index = 3}).classes.empty());
}

TEST_CASE("generator elimination preserves the group") {
  const char* finite[] = {
      "< a, b | a^2, b^3, (a*b)^3 >",
      "< a, b, c | a^2, b^2, c^2, (a*b)^3, (b*c)^3, (a*c)^2 >",
      "< a, b, c | a*b*c^-1, b*c*a^-1, c*a*b^-1 >",
      "< x, y, t | t*x*t^-1*y^-1, t^2, x^5, y^5, x*y*x^-1*y^-1 >",
  };
  for (const char* text : finite) {
    CAPTURE(text);
    const Presentation p = parse_presentation(text);
    const TietzeResult r = eliminate_generators(p);
    CHECK(r.presentation.generator_count() <= p.generator_count());
    const CosetTable before = todd_coxeter(p, {});
    const CosetTable after = todd_coxeter(r.presentation, {});
    CHECK(before.index() == after.index());
    // Old relators hold in the new group.
    for (const Word& rel : p.relators()) CHECK(trace(after, 0, map_word(r, rel)) == 0);
  }

  const Presentation g = fpg::testing::gamma_bar();
  auto words = fpg::testing::paper_words();
  ReidemeisterSchreier pi(g, todd_coxeter(g, words.pi));
  const TietzeResult r = eliminate_generators(pi.presentation());
  CHECK(abelian_invariants(r.presentation) == abelian_invariants(pi.presentation()));
  std::vector<Word> sigma;
  for (const auto& w : words.sigma) sigma.push_back(map_word(r, pi.rewrite(w)));
  CHECK(todd_coxeter(r.presentation, sigma).index() == 4);
}
