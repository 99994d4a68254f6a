#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/cayley.hpp"

namespace fpg {

// Isomorphism invariants of a finite group. The first six fields alone do
// not separate Q8 x Z2 from Z4:Z4 (order 16), so the conjugacy-class count
// and the number of distinct squares are included as well.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::map<std::uint64_t, std::size_t> element_orders;  // element order -> count
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::uint64_t exponent = 1;
  std::size_t conjugacy_classes = 0;
  std::size_t squares = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const CayleyTable& c);

// "{1:1, 2:3, 3:8}"
std::string format_element_orders(const Fingerprint& f);

struct IsoClass {
  std::size_t order = 0;
  std::string name;
  Fingerprint fingerprint;
};

struct CatalogEntry {
  std::string name;
  std::size_t order;
  std::string presentation;
};

// Every group of order 1..24, one presentation each. Names: Zn cyclic, x
// direct product, ':' semidirect, o central product, Dn dihedral of order n,
// Dicn dicyclic of order 4n, Q8/Q16 (generalized) quaternion, QD16
// semidihedral, M16 modular.
const std::vector<CatalogEntry>& catalog_entries();

// Catalog with fingerprints, built once on first use.
const std::vector<IsoClass>& catalog();

class NotInCatalog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxCatalogOrder = 24;

// Throws NotInCatalog for orders above 24.
IsoClass identify(const CayleyTable& c);

}  // namespace fpg
