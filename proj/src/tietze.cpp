#include "fpg/tietze.hpp"

#include <algorithm>
#include <set>

namespace fpg {

namespace {

Word substitute(const Word& w, std::uint32_t x, const Word& value) {
  const Word inverse = invert(value);
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.gen != x) {
      out.push_back(l);
      continue;
    }
    const Word& part = l.inverse ? inverse : value;
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(out);
}

Word cyclic_canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, invert(w)})
    for (auto& rot : rotations(base))
      if (rot < best) best = std::move(rot);
  return best;
}

void tidy(std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (Word& r : relators) {
    r = cyclic_reduce(r);
    if (r.empty()) continue;
    if (seen.insert(cyclic_canonical(r)).second) out.push_back(std::move(r));
  }
  relators = std::move(out);
}

}  // namespace

TietzeResult eliminate_generators(const Presentation& p, double length_factor, std::size_t min_length_budget) {
  const std::size_t n = p.generator_count();
  std::vector<Word> rels(p.relators());
  tidy(rels);
  std::vector<Word> images;
  for (std::uint32_t g = 0; g < n; ++g) images.push_back(Word{gen(g)});
  std::vector<bool> alive(n, true);

  auto total_length = [&] {
    std::size_t t = 0;
    for (const Word& r : rels) t += r.size();
    return t;
  };
  const auto budget = std::max<std::size_t>(
      min_length_budget, static_cast<std::size_t>(length_factor * static_cast<double>(total_length())));

  for (;;) {
    std::vector<std::size_t> occurrences(n, 0);
    for (const Word& r : rels)
      for (Letter l : r) ++occurrences[l.gen];
    const std::size_t total = total_length();

    bool found = false;
    long best_cost = 0;
    std::size_t best_rel = 0;
    std::uint32_t best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::vector<std::size_t> here(n, 0);
      for (Letter l : rels[i]) ++here[l.gen];
      for (std::uint32_t x = 0; x < n; ++x) {
        if (here[x] != 1) continue;
        const auto len = static_cast<long>(rels[i].size());
        const auto elsewhere = static_cast<long>(occurrences[x] - 1);
        const long cost = elsewhere * (len - 2) - len;
        if (static_cast<long>(total) + cost > static_cast<long>(budget)) continue;
        if (!found || cost < best_cost) {
          found = true;
          best_cost = cost;
          best_rel = i;
          best_gen = x;
        }
      }
    }
    if (!found) break;

    // Rotate so x leads: x^e * rest = 1.
    const Word r = rels[best_rel];
    std::size_t at = 0;
    while (r[at].gen != best_gen) ++at;
    std::vector<Letter> rest(r.begin() + static_cast<std::ptrdiff_t>(at) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(at));
    const Word value = r[at].inverse ? Word(std::move(rest)) : invert(Word(std::move(rest)));

    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
    for (Word& other : rels) other = substitute(other, best_gen, value);
    for (Word& image : images) image = substitute(image, best_gen, value);
    alive[best_gen] = false;
    tidy(rels);
  }

  std::vector<long> renumber(n, -1);
  std::vector<std::string> names;
  for (std::uint32_t g = 0; g < n; ++g)
    if (alive[g]) {
      renumber[g] = static_cast<long>(names.size());
      names.push_back(p.generator_names()[g]);
    }
  auto remap = [&](const Word& w) {
    std::vector<Letter> out;
    for (Letter l : w) out.push_back({static_cast<std::uint32_t>(renumber[l.gen]), l.inverse});
    return Word(std::move(out));
  };
  TietzeResult out{Presentation{}, {}};
  std::vector<Word> new_rels;
  for (const Word& r : rels) new_rels.push_back(remap(r));
  for (const Word& image : images) out.images.push_back(remap(image));
  out.presentation = Presentation(std::move(names), std::move(new_rels));
  return out;
}

Word map_word(const TietzeResult& t, const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.gen >= t.images.size()) throw std::out_of_range("map_word: generator out of range");
    const Word& image = t.images[l.gen];
    const Word part = l.inverse ? invert(image) : image;
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(out);
}

}  // namespace fpg
