#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

struct SubgroupSearchOptions {
  std::size_t max_index = 1;
  std::optional<std::size_t> exact_index;
  bool normal_only = false;
  // Cap on backtrack nodes; the search stops early and reports incomplete.
  std::optional<std::uint64_t> node_budget;
};

struct SubgroupSearchResult {
  // One complete standardized table per conjugacy class, sorted by
  // (index, entries). Subgroup generators are the nontrivial Schreier
  // generators of each table.
  std::vector<CosetTable> classes;
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Sims-style backtrack over partial coset tables with a first-in-class
// canonicity test.
SubgroupSearchResult low_index_subgroups(const Presentation& p, const SubgroupSearchOptions& opts);

// Positions of classes whose stored representative contains every word.
std::vector<std::size_t> classes_containing(const Presentation& p, std::span<const CosetTable> classes,
                                            std::span<const Word> gens);

// Normal subgroups N with G/N abelian of order `index`, as pullbacks of the
// index-`index` subgroups of the abelianization. When every group of that
// order is abelian (e.g. 4, or a prime) this is the full list of normal
// subgroups of that index. Sorted like low_index_subgroups.
std::vector<CosetTable> normal_subgroups_abelian_quotient(const Presentation& p, std::size_t index);

// Builds a table with subgroup generators taken from its Schreier generators.
CosetTable with_schreier_subgroup(const Presentation& p, const CosetTable& t);

}  // namespace fpg
