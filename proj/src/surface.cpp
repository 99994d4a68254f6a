#include "fpg/surface.hpp"

namespace fpg {

SurfaceInvariants::SurfaceInvariants(long chi_, long q_, long pg_, long K2_) : chi(chi_), q(q_), pg(pg_), K2(K2_) {
  if (q < 0 || pg < 0) throw std::invalid_argument("SurfaceInvariants: q and pg must be non-negative");
  if (chi != pg - q + 1) throw std::invalid_argument("SurfaceInvariants: chi != pg - q + 1");
}

std::string to_string(const SurfaceInvariants& s) {
  return "(chi " + std::to_string(s.chi) + ", q " + std::to_string(s.q) + ", pg " + std::to_string(s.pg) + ", K2 " +
         std::to_string(s.K2) + ")";
}

SurfaceInvariants etale_cover_invariants(const SurfaceInvariants& base, long degree, long cover_q) {
  if (degree < 1) throw std::invalid_argument("etale_cover_invariants: degree must be positive");
  const long chi = base.chi * degree;
  return SurfaceInvariants(chi, cover_q, chi + cover_q - 1, base.K2 * degree);
}

mpq_class beauville_bound(long pg) {
  if (pg < 3) throw std::invalid_argument("beauville_bound: needs pg >= 3");
  mpq_class r(9 * (pg + 1), pg - 2);
  r.canonicalize();
  return r;
}

long canonical_degree_chain(const SurfaceInvariants& inv, long deg_image_surface) {
  if (deg_image_surface < 1) throw std::invalid_argument("canonical_degree_chain: image degree must be positive");
  if (inv.pg < 3) throw std::invalid_argument("canonical_degree_chain: needs pg >= 3");
  return inv.K2 / deg_image_surface;
}

}  // namespace fpg
