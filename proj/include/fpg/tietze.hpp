#pragma once

#include <cstddef>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

struct TietzeResult {
  Presentation presentation;
  // images[i]: original generator i as a word in the new generators.
  std::vector<Word> images;
};

// Eliminates generators occurring exactly once in some relator, cheapest
// first, while total relator length stays within `length_factor` times the
// starting total (or `min_length_budget`, whichever is larger).
TietzeResult eliminate_generators(const Presentation& p, double length_factor = 5.0,
                                  std::size_t min_length_budget = 0);

// Maps a word over the original generators to the simplified ones.
Word map_word(const TietzeResult& t, const Word& w);

}  // namespace fpg
