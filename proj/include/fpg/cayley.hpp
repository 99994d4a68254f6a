#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

using Label = std::uint32_t;

// Multiplication table of a finite group; label 0 is the identity. The
// constructor checks the group axioms (Latin square, identity, associativity).
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(std::vector<std::vector<Label>> rows);

  std::size_t order() const { return rows_.size(); }
  Label operator()(Label a, Label b) const { return rows_[a][b]; }
  const std::vector<std::vector<Label>>& rows() const { return rows_; }

  Label inverse(Label a) const;
  std::uint64_t element_order(Label a) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::vector<std::vector<Label>> rows_;
};

// Order-prefixed grid: "n\n" then n rows of n labels.
std::string format_cayley(const CayleyTable& c);
CayleyTable parse_cayley(std::string_view text);

// Same group with labels moved by `perm`, which must fix 0.
CayleyTable relabel(const CayleyTable& c, const std::vector<Label>& perm);
CayleyTable random_relabel(const CayleyTable& c, std::mt19937& rng);

// Cosets fixed by every stored subgroup generator: the cosets of N_G(H)/H.
std::vector<Coset> fixed_cosets(const CosetTable& t);

struct NormalizerIndex {
  std::size_t norm_over_sub = 0;   // |N : H|
  std::size_t group_over_norm = 0; // |G : N|
  friend bool operator==(const NormalizerIndex&, const NormalizerIndex&) = default;
};
NormalizerIndex normalizer_index(const CosetTable& t);

// N_G(H)/H from its regular action on the fixed cosets: label k is the k-th
// fixed coset, and a*b = trace(coset_a, representative of coset_b).
CayleyTable quotient_on_fixed(const Presentation& p, const CosetTable& t);

// Regular table of a finite group given by a presentation.
CayleyTable regular_cayley(const Presentation& p);

// Subgroup helpers. Subsets are sorted label lists.
std::vector<Label> subgroup_closure(const CayleyTable& c, const std::vector<Label>& gens);
bool is_subgroup(const CayleyTable& c, const std::vector<Label>& subset);
// Throws std::invalid_argument if subset is not a subgroup.
bool is_normal_in(const CayleyTable& c, const std::vector<Label>& subset);
std::vector<Label> derived_subgroup(const CayleyTable& c);
std::vector<Label> center(const CayleyTable& c);
std::size_t abelianization_order(const CayleyTable& c);
bool is_abelian(const CayleyTable& c);

}  // namespace fpg
