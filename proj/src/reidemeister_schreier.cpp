#include "fpg/reidemeister_schreier.hpp"

#include <algorithm>
#include <set>

namespace fpg {

std::vector<SchreierGenerator> schreier_generators(const Presentation& p, const CosetTable& t) {
  if (!t.is_complete() || t.generator_count() != p.generator_count())
    throw std::invalid_argument("schreier_generators: table does not match the presentation");
  const auto reps = representatives(t);
  std::vector<SchreierGenerator> out;
  out.reserve(t.index() * p.generator_count());
  for (Coset c = 0; c < t.index(); ++c) {
    for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
      Word w = concat(concat(reps[c], Word{gen(g)}), invert(reps[t.act(c, gen(g))]));
      const bool trivial = w.empty();
      out.push_back({c, g, std::move(w), trivial});
    }
  }
  return out;
}

namespace {

// Canonical representative of a cyclic word up to rotation and inversion.
Word cyclic_canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, invert(w)})
    for (auto& rot : rotations(base))
      if (rot < best) best = std::move(rot);
  return best;
}

}  // namespace

ReidemeisterSchreier::ReidemeisterSchreier(const Presentation& p, const CosetTable& t)
    : table_(t), n_generators_(p.generator_count()), schreier_(schreier_generators(p, t)) {
  const std::size_t trivial = static_cast<std::size_t>(
      std::count_if(schreier_.begin(), schreier_.end(), [](const auto& s) { return s.trivial; }));
  if (trivial + 1 != t.index())
    throw std::logic_error("ReidemeisterSchreier: transversal is not a Schreier transversal");

  std::vector<Word> raw;
  raw.reserve(t.index() * p.relators().size());
  for (Coset c = 0; c < t.index(); ++c) {
    for (const Word& r : p.relators()) {
      Coset end = 0;
      Word rewritten = rewrite_from(c, r, &end);
      if (end != c) throw std::invalid_argument("ReidemeisterSchreier: table violates a relator");
      raw.push_back(std::move(rewritten));
    }
  }

  // Kill generators forced trivial by length-1 relators until stable.
  std::vector<bool> killed(schreier_.size(), false);
  for (std::size_t i = 0; i < schreier_.size(); ++i) killed[i] = schreier_[i].trivial;
  auto strip = [&](const Word& w) {
    std::vector<Letter> kept;
    for (Letter l : w)
      if (!killed[l.gen]) kept.push_back(l);
    return cyclic_reduce(Word(std::move(kept)));
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const Word& r : raw) {
      Word s = strip(r);
      if (s.size() == 1 && !killed[s[0].gen]) {
        killed[s[0].gen] = true;
        changed = true;
      }
    }
  }

  to_presented_.assign(schreier_.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < schreier_.size(); ++i) {
    if (killed[i]) continue;
    to_presented_[i] = static_cast<long>(names.size());
    presented_to_schreier_.push_back(static_cast<std::uint32_t>(i));
    names.push_back(p.generator_names()[schreier_[i].generator] + "_" +
                    std::to_string(schreier_[i].coset));
  }

  std::vector<Word> relators;
  std::set<Word> seen;
  for (const Word& r : raw) {
    Word s = simplify_word(r);
    s = cyclic_reduce(s);
    if (s.empty()) continue;
    if (seen.insert(cyclic_canonical(s)).second) relators.push_back(std::move(s));
  }
  presentation_ = Presentation(std::move(names), std::move(relators));
}

Word ReidemeisterSchreier::rewrite_from(Coset start, const Word& w, Coset* end) const {
  std::vector<Letter> out;
  Coset c = start;
  for (Letter l : w) {
    if (l.gen >= n_generators_) throw std::out_of_range("rewrite: generator out of range");
    if (!l.inverse) {
      const std::size_t s = c * n_generators_ + l.gen;
      if (!schreier_[s].trivial) out.push_back(gen(static_cast<std::uint32_t>(s)));
      c = table_.act(c, l);
    } else {
      c = table_.act(c, l);
      const std::size_t s = c * n_generators_ + l.gen;
      if (!schreier_[s].trivial) out.push_back(inv(static_cast<std::uint32_t>(s)));
    }
  }
  *end = c;
  return free_reduce(out);
}

Word ReidemeisterSchreier::simplify_word(const Word& raw) const {
  std::vector<Letter> out;
  for (Letter l : raw) {
    const long id = to_presented_[l.gen];
    if (id >= 0) out.push_back({static_cast<std::uint32_t>(id), l.inverse});
  }
  return free_reduce(out);
}

Word ReidemeisterSchreier::rewrite_unsimplified(const Word& w) const {
  Coset end = 0;
  Word out = rewrite_from(0, w, &end);
  if (end != 0) throw NotInSubgroup();
  return out;
}

Word ReidemeisterSchreier::rewrite(const Word& w) const {
  return simplify_word(rewrite_unsimplified(w));
}

Word ReidemeisterSchreier::expand_unsimplified(const Word& w) const {
  std::vector<Letter> out;
  for (Letter l : w) {
    const Word& s = schreier_.at(l.gen).word;
    Word part = l.inverse ? invert(s) : s;
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(out);
}

Word ReidemeisterSchreier::expand(std::uint32_t subgroup_generator) const {
  return schreier_.at(presented_to_schreier_.at(subgroup_generator)).word;
}

Presentation subgroup_presentation(const Presentation& p, const CosetTable& t) {
  return ReidemeisterSchreier(p, t).presentation();
}

Word rewrite_word(const Presentation& p, const CosetTable& t, const Word& w) {
  return ReidemeisterSchreier(p, t).rewrite(w);
}

}  // namespace fpg
