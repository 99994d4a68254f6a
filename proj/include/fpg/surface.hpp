#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fpg {

// Numerical invariants of a smooth compact surface. Construction checks
// chi = pg - q + 1.
struct SurfaceInvariants {
  long chi = 1;
  long q = 0;
  long pg = 0;
  long K2 = 9;

  SurfaceInvariants() = default;
  SurfaceInvariants(long chi, long q, long pg, long K2);

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

std::string to_string(const SurfaceInvariants& s);

// Unramified cover of the given degree. q of the cover is an input: it is not
// determined by the degree.
SurfaceInvariants etale_cover_invariants(const SurfaceInvariants& base, long degree, long cover_q);

// 9 (pg + 1) / (pg - 2), exact. Requires pg >= 3.
mpq_class beauville_bound(long pg);

// K2 / deg_image_surface: the largest canonical degree allowed when the
// fixed part vanishes. Requires pg >= 3 and a positive image degree.
long canonical_degree_chain(const SurfaceInvariants& inv, long deg_image_surface);

}  // namespace fpg
