#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fpg {

// A generator reference with a sign. Column index in a coset table is
// 2 * gen for the generator and 2 * gen + 1 for its inverse.
struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return {gen, !inverse}; }
  constexpr std::size_t column() const { return 2 * std::size_t(gen) + (inverse ? 1 : 0); }
  static constexpr Letter from_column(std::size_t col) {
    return {static_cast<std::uint32_t>(col / 2), (col & 1) != 0};
  }
  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return std::pair(a.gen, a.inverse) <=> std::pair(b.gen, b.inverse);
  }
};

constexpr Letter gen(std::uint32_t g) { return {g, false}; }
constexpr Letter inv(std::uint32_t g) { return {g, true}; }

// Flat sequence of letters. Not necessarily freely reduced; every
// operation below returns a reduced word.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }

  // Largest generator index referenced plus one; 0 for the empty word.
  std::uint32_t generator_bound() const;
  bool is_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> letters);
inline Word free_reduce(const Word& w) { return free_reduce(w.letters()); }

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long n);

// Free reduction followed by removal of matching letters at both ends.
Word cyclic_reduce(const Word& w);

// All cyclic rotations of w (w must be cyclically reduced), starting with w.
std::vector<Word> rotations(const Word& w);

// Exponent-sum vector, one entry per generator.
std::vector<long> exponent_sums(const Word& w, std::size_t n_generators);

// Renders w with runs collapsed, e.g. "b^3*z^-2*b". The empty word is "1".
std::string format_word(const Word& w, std::span<const std::string> names);

}  // namespace fpg
