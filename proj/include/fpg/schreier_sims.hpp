#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "fpg/permutation.hpp"

namespace fpg {

// Base and strong generating set, built by deterministic Schreier-Sims. New
// base points are the smallest point moved by the element that needs them.
// Degrees here are small (at most a few hundred), so transversals are stored
// as explicit permutations.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  mpz_class order() const;
  bool contains(const Permutation& g) const;
  std::vector<std::uint32_t> base() const;
  std::size_t degree() const { return degree_; }

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> generators;
    std::vector<std::uint32_t> orbit;
    // transversal[b] maps the base point to b; degree-0 when b is not in the orbit.
    std::vector<Permutation> transversal;
  };

  Permutation sift(Permutation g) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

mpz_class group_order(std::span<const Permutation> generators);

}  // namespace fpg
