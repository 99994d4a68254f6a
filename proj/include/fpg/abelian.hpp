#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/smith.hpp"

namespace fpg {

// Z^free_rank x Z_{d1} x ... x Z_{dk} with 2 <= d1 | d2 | ... | dk.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  static AbelianInvariants of(std::size_t free_rank, std::initializer_list<long> torsion);

  // Order of the torsion subgroup.
  mpz_class torsion_order() const;
  bool is_finite() const { return free_rank == 0; }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// "Z2^5 x Z4", "Z^2 x Z3", "1" for the trivial group.
std::string to_string(const AbelianInvariants& a);

// Row per relator, column per generator: exponent sums.
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace fpg
