#pragma once

#include <stdexcept>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

class NotInSubgroup : public std::runtime_error {
 public:
  NotInSubgroup() : std::runtime_error("word is not in the subgroup") {}
};

// r_c * g * r_{c.g}^-1 for coset c and generator g, over the parent's
// generators. Trivial ones come from edges of the transversal tree.
struct SchreierGenerator {
  Coset coset = 0;
  std::uint32_t generator = 0;
  Word word;
  bool trivial = false;
};

// All index * n_generators Schreier generators, ordered by (coset, generator).
std::vector<SchreierGenerator> schreier_generators(const Presentation& p, const CosetTable& t);

// Reidemeister-Schreier presentation of the subgroup described by a
// complete standardized coset table.
//
// Generators are the nontrivial Schreier generators, named "<gen>_<coset>";
// relators are the rewritten conjugates r_c R r_c^-1. The presentation is
// lightly simplified: relators are cyclically reduced, duplicates up to
// rotation and inversion are dropped, and generators killed by length-1
// relators are removed.
class ReidemeisterSchreier {
 public:
  ReidemeisterSchreier(const Presentation& p, const CosetTable& t);

  const Presentation& presentation() const { return presentation_; }
  const std::vector<SchreierGenerator>& schreier() const { return schreier_; }

  // Word over presentation() generators equal to w in the subgroup.
  // Throws NotInSubgroup if w does not trace coset 0 to itself.
  Word rewrite(const Word& w) const;

  // Rewriting over all Schreier generators (index c * n + g), before any
  // simplification, and its inverse map back to parent words.
  Word rewrite_unsimplified(const Word& w) const;
  Word expand_unsimplified(const Word& w) const;

  // Parent-group word for each generator of presentation().
  Word expand(std::uint32_t subgroup_generator) const;

 private:
  Word rewrite_from(Coset start, const Word& w, Coset* end) const;
  Word simplify_word(const Word& raw) const;

  CosetTable table_;
  std::size_t n_generators_;
  std::vector<SchreierGenerator> schreier_;
  // Schreier index -> generator of presentation_, or -1 when trivial/killed.
  std::vector<long> to_presented_;
  std::vector<std::uint32_t> presented_to_schreier_;
  Presentation presentation_;
};

Presentation subgroup_presentation(const Presentation& p, const CosetTable& t);
Word rewrite_word(const Presentation& p, const CosetTable& t, const Word& w);

}  // namespace fpg
