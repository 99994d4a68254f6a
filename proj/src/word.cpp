#include "fpg/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fpg {

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverted()) return false;
  return true;
}

Word free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverted());
  return free_reduce(out);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> all(u.begin(), u.end());
  all.insert(all.end(), v.begin(), v.end());
  return free_reduce(all);
}

Word power(const Word& w, long n) {
  if (n == 0 || w.empty()) return {};
  Word base = n < 0 ? invert(w) : free_reduce(w);
  unsigned long count = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  if (count > (1ul << 24) / std::max<std::size_t>(base.size(), 1))
    throw std::length_error("power: word too long");
  std::vector<Letter> all;
  all.reserve(base.size() * count);
  for (unsigned long k = 0; k < count; ++k) all.insert(all.end(), base.begin(), base.end());
  return free_reduce(all);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + lo, r.begin() + hi));
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Letter> rot;
    rot.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rot.push_back(w[(s + i) % n]);
    out.emplace_back(std::move(rot));
  }
  return out;
}

std::vector<long> exponent_sums(const Word& w, std::size_t n_generators) {
  std::vector<long> sums(n_generators, 0);
  for (Letter l : w) {
    if (l.gen >= n_generators) throw std::out_of_range("exponent_sums: generator out of range");
    sums[l.gen] += l.inverse ? -1 : 1;
  }
  return sums;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    const std::uint32_t g = w[i].gen;
    long run = 0;
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++run;
      ++j;
    }
    if (w[i].inverse) run = -run;
    if (g >= names.size()) throw std::out_of_range("format_word: generator out of range");
    if (!first) os << '*';
    first = false;
    os << names[g];
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

}  // namespace fpg
