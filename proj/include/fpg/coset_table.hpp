#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fpg/permutation.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

using Coset = std::uint32_t;
inline constexpr Coset kUndefined = std::numeric_limits<Coset>::max();

// Right action of the generators on right cosets Hg. Coset 0 is H. Columns
// run g1, g1^-1, g2, g2^-1, ...
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t n_generators, std::vector<Coset> entries,
             std::vector<Word> subgroup_generators);

  std::size_t generator_count() const { return n_generators_; }
  std::size_t column_count() const { return 2 * n_generators_; }
  std::size_t index() const { return n_generators_ ? entries_.size() / column_count() : rows_; }

  Coset operator()(Coset c, std::size_t column) const { return entries_[c * column_count() + column]; }
  Coset act(Coset c, Letter l) const { return (*this)(c, l.column()); }
  std::span<const Coset> row(Coset c) const {
    return std::span<const Coset>(entries_).subspan(c * column_count(), column_count());
  }
  const std::vector<Coset>& entries() const { return entries_; }
  const std::vector<Word>& subgroup_generators() const { return subgroup_generators_; }

  bool is_complete() const;
  // Standardized: cosets are numbered in BFS order from coset 0.
  bool is_standard() const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.n_generators_ == b.n_generators_ && a.rows_ == b.rows_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_generators_ = 0;
  std::size_t rows_ = 1;  // only meaningful with zero generators
  std::vector<Coset> entries_;
  std::vector<Word> subgroup_generators_;
};

// Renumbers a complete table by BFS from coset 0, columns in order.
CosetTable standardize(const CosetTable& t);

Coset trace(const CosetTable& t, Coset start, const Word& w);
bool contains(const CosetTable& t, const Word& w);
std::vector<Permutation> coset_action(const CosetTable& t);

// Schreier transversal: representatives()[i] traces coset 0 to coset i.
std::vector<Word> representatives(const CosetTable& t);

// True iff every subgroup generator fixes every coset.
bool is_normal(const CosetTable& t);

// Every relator closes at every coset and every subgroup generator closes at 0.
bool satisfies(const CosetTable& t, const Presentation& p);

// One row per coset; columns g1 g1' g2 g2' ...
std::string format_table(const CosetTable& t);

}  // namespace fpg
