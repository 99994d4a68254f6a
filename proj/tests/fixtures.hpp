#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/word_table.hpp"

namespace fpg::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FPG_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Presentation gamma_bar() { return parse_presentation(read_data("gamma_bar.fp")); }

inline std::vector<Word> words_from(const WordTable& table, const std::vector<std::size_t>& ids) {
  std::vector<Word> out;
  for (auto i : ids) out.push_back(table.expand_entry(i));
  return out;
}

struct PaperWords {
  WordTable table;
  std::vector<Word> pi;
  std::vector<Word> sigma;
};

inline PaperWords paper_words() {
  PaperWords w{WordTable(gamma_bar()), {}, {}};
  w.pi = words_from(w.table, w.table.load(read_data("pi.words"), "pi.words"));
  w.table.load(read_data("g_defs.words"), "g_defs.words");
  w.sigma = words_from(w.table, w.table.load(read_data("sigma.words"), "sigma.words"));
  return w;
}

inline Word random_word(std::mt19937& rng, std::uint32_t n_generators, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::uint32_t> g(0, n_generators - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) letters.push_back({g(rng), sign(rng)});
  return Word(std::move(letters));
}

}  // namespace fpg::testing

#include "doctest.h"
#include "fpg/abelian.hpp"

namespace doctest {
template <>
struct StringMaker<fpg::AbelianInvariants> {
  static String convert(const fpg::AbelianInvariants& a) { return fpg::to_string(a).c_str(); }
};
}  // namespace doctest
