#include "fpg/identify.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace fpg {

Fingerprint fingerprint(const CayleyTable& c) {
  Fingerprint f;
  const std::size_t n = c.order();
  f.order = n;
  for (Label a = 0; a < n; ++a) {
    const std::uint64_t k = c.element_order(a);
    ++f.element_orders[k];
    f.exponent = std::lcm(f.exponent, k);
  }
  f.center_order = center(c).size();
  f.abelian = f.center_order == n;
  f.derived_order = derived_subgroup(c).size();

  std::vector<bool> seen(n, false);
  for (Label a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++f.conjugacy_classes;
    for (Label g = 0; g < n; ++g) seen[c(c(c.inverse(g), a), g)] = true;
  }
  std::set<Label> squares;
  for (Label a = 0; a < n; ++a) squares.insert(c(a, a));
  f.squares = squares.size();
  return f;
}

std::string format_element_orders(const Fingerprint& f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, count] : f.element_orders) {
    os << (first ? "" : ", ") << k << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

std::string comm(const std::string& a, const std::string& b) {
  return a + "^-1*" + b + "^-1*" + a + "*" + b;
}

std::string cyclic(std::size_t n) { return "< a | a^" + std::to_string(n) + " >"; }

std::string dihedral(std::size_t n) {
  return "< a, b | a^" + std::to_string(n / 2) + ", b^2, (a*b)^2 >";
}

// Dicyclic of order 4m: a^(2m), a^m = b^2, b^-1 a b = a^-1.
std::string dicyclic(std::size_t m) {
  return "< a, b | a^" + std::to_string(2 * m) + ", a^" + std::to_string(m) + "*b^-2, b^-1*a*b*a >";
}

// Zm x Zk.
std::string abelian2(std::size_t m, std::size_t k) {
  return "< a, b | a^" + std::to_string(m) + ", b^" + std::to_string(k) + ", " + comm("a", "b") + " >";
}

// Zm x Z2 x Z2.
std::string abelian3(std::size_t m) {
  return "< a, b, c | a^" + std::to_string(m) + ", b^2, c^2, " + comm("a", "b") + ", " + comm("a", "c") + ", " +
         comm("b", "c") + " >";
}

// Direct product of a two-generator group (relators over a, b) with Zk on c.
std::string times_cyclic(const std::string& relators, std::size_t k) {
  return "< a, b, c | " + relators + ", c^" + std::to_string(k) + ", " + comm("a", "c") + ", " +
         comm("b", "c") + " >";
}

std::vector<CatalogEntry> build_entries() {
  const std::string s3 = "a^3, b^2, (a*b)^2";
  const std::string d8 = "a^4, b^2, (a*b)^2";
  const std::string q8 = "a^4, a^2*b^-2, b^-1*a*b*a";
  const std::string a4 = "a^2, b^3, (a*b)^3";
  const std::string dic3 = "a^6, a^3*b^-2, b^-1*a*b*a";
  std::vector<CatalogEntry> e{
      {"1", 1, "< | >"},
      {"Z2", 2, cyclic(2)},
      {"Z3", 3, cyclic(3)},
      {"Z4", 4, cyclic(4)},
      {"Z2xZ2", 4, abelian2(2, 2)},
      {"Z5", 5, cyclic(5)},
      {"Z6", 6, cyclic(6)},
      {"S3", 6, dihedral(6)},
      {"Z7", 7, cyclic(7)},
      {"Z8", 8, cyclic(8)},
      {"Z4xZ2", 8, abelian2(4, 2)},
      {"Z2xZ2xZ2", 8, abelian3(2)},
      {"D8", 8, dihedral(8)},
      {"Q8", 8, dicyclic(2)},
      {"Z9", 9, cyclic(9)},
      {"Z3xZ3", 9, abelian2(3, 3)},
      {"Z10", 10, cyclic(10)},
      {"D10", 10, dihedral(10)},
      {"Z11", 11, cyclic(11)},
      {"Z12", 12, cyclic(12)},
      {"Z6xZ2", 12, abelian2(6, 2)},
      {"A4", 12, "< a, b | " + a4 + " >"},
      {"D12", 12, dihedral(12)},
      {"Dic3", 12, dicyclic(3)},
      {"Z13", 13, cyclic(13)},
      {"Z14", 14, cyclic(14)},
      {"D14", 14, dihedral(14)},
      {"Z15", 15, cyclic(15)},
      {"Z16", 16, cyclic(16)},
      {"Z4xZ4", 16, abelian2(4, 4)},
      {"(Z4xZ2):Z2", 16,
       "< a, b, c | a^4, b^2, c^2, " + comm("a", "b") + ", " + comm("b", "c") + ", c*a*c*b^-1*a^-1 >"},
      {"Z4:Z4", 16, "< a, b | a^4, b^4, b^-1*a*b*a >"},
      {"Z8xZ2", 16, abelian2(8, 2)},
      {"M16", 16, "< a, b | a^8, b^2, b*a*b*a^-5 >"},
      {"D16", 16, dihedral(16)},
      {"QD16", 16, "< a, b | a^8, b^2, b*a*b*a^-3 >"},
      {"Q16", 16, dicyclic(4)},
      {"Z4xZ2xZ2", 16, abelian3(4)},
      {"D8xZ2", 16, times_cyclic(d8, 2)},
      {"Q8xZ2", 16, times_cyclic(q8, 2)},
      {"D8oZ4", 16, "< a, b, c | " + d8 + ", c^4, c^2*a^-2, " + comm("a", "c") + ", " + comm("b", "c") + " >"},
      {"Z2xZ2xZ2xZ2", 16,
       "< a, b, c, d | a^2, b^2, c^2, d^2, " + comm("a", "b") + ", " + comm("a", "c") + ", " + comm("a", "d") +
           ", " + comm("b", "c") + ", " + comm("b", "d") + ", " + comm("c", "d") + " >"},
      {"Z17", 17, cyclic(17)},
      {"Z18", 18, cyclic(18)},
      {"D18", 18, dihedral(18)},
      {"Z3xS3", 18, times_cyclic(s3, 3)},
      {"(Z3xZ3):Z2", 18, "< a, b, c | a^3, b^3, " + comm("a", "b") + ", c^2, (a*c)^2, (b*c)^2 >"},
      {"Z6xZ3", 18, abelian2(6, 3)},
      {"Z19", 19, cyclic(19)},
      {"Z20", 20, cyclic(20)},
      {"Z10xZ2", 20, abelian2(10, 2)},
      {"D20", 20, dihedral(20)},
      {"Dic5", 20, dicyclic(5)},
      {"Z5:Z4", 20, "< a, b | a^5, b^4, b^-1*a*b*a^-2 >"},
      {"Z21", 21, cyclic(21)},
      {"Z7:Z3", 21, "< a, b | a^7, b^3, b^-1*a*b*a^-2 >"},
      {"Z22", 22, cyclic(22)},
      {"D22", 22, dihedral(22)},
      {"Z23", 23, cyclic(23)},
      {"Z24", 24, cyclic(24)},
      {"Z12xZ2", 24, abelian2(12, 2)},
      {"Z6xZ2xZ2", 24, abelian3(6)},
      {"Z3:Z8", 24, "< a, b | a^3, b^8, b^-1*a*b*a >"},
      {"SL(2,3)", 24, "< a, b | a^3*b^-3, (a*b)^2*a^-3 >"},
      {"Dic6", 24, dicyclic(6)},
      {"Z4xS3", 24, times_cyclic(s3, 4)},
      {"D24", 24, dihedral(24)},
      {"Z2xDic3", 24, times_cyclic(dic3, 2)},
      {"Z3:D8", 24,
       "< a, b, c | a^3, b^4, c^2, (b*c)^2, b^-1*a*b*a, c^-1*a^-1*c*a >"},
      {"Z3xD8", 24, times_cyclic(d8, 3)},
      {"Z3xQ8", 24, times_cyclic(q8, 3)},
      {"S4", 24, "< a, b | a^2, b^3, (a*b)^4 >"},
      {"Z2xA4", 24, times_cyclic(a4, 2)},
      {"Z2xZ2xS3", 24,
       "< a, b, c, d | " + s3 + ", c^2, d^2, " + comm("c", "d") + ", " + comm("a", "c") + ", " + comm("b", "c") +
           ", " + comm("a", "d") + ", " + comm("b", "d") + " >"},
  };
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const std::vector<IsoClass>& catalog() {
  static const std::vector<IsoClass> classes = [] {
    std::vector<IsoClass> out;
    for (const CatalogEntry& e : catalog_entries()) {
      const CayleyTable c = regular_cayley(parse_presentation(e.presentation));
      if (c.order() != e.order) throw std::logic_error("catalog: " + e.name + " has the wrong order");
      out.push_back({e.order, e.name, fingerprint(c)});
    }
    return out;
  }();
  return classes;
}

IsoClass identify(const CayleyTable& c) {
  if (c.order() > kMaxCatalogOrder)
    throw NotInCatalog("identify: order " + std::to_string(c.order()) + " is outside the catalog");
  const Fingerprint f = fingerprint(c);
  for (const IsoClass& k : catalog())
    if (k.fingerprint == f) return k;
  throw std::logic_error("identify: no catalog group matches the fingerprint");
}

}  // namespace fpg
