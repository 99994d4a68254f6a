#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

enum class Strategy { hlt, felsch };

struct EnumerationLimits {
  std::size_t max_cosets = 1'000'000;
  Strategy strategy = Strategy::hlt;
  // Re-check row/column consistency after every coincidence (slow).
  bool check_consistency = false;
};

struct EnumerationStats {
  std::size_t cosets_defined = 0;
  std::size_t max_live = 0;
  std::size_t coincidences = 0;
  std::size_t lookaheads = 0;
};

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  explicit EnumerationLimitExceeded(std::size_t max_cosets);
  std::size_t max_cosets() const { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

// Enumerates the right cosets of the subgroup generated by `subgroup_generators`.
// Returns a complete standardized table or throws EnumerationLimitExceeded.
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_generators,
                        const EnumerationLimits& limits = {}, EnumerationStats* stats = nullptr);

}  // namespace fpg
