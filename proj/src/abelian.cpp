#include "fpg/abelian.hpp"

#include <sstream>

namespace fpg {

AbelianInvariants AbelianInvariants::of(std::size_t free_rank, std::initializer_list<long> torsion) {
  AbelianInvariants a;
  a.free_rank = free_rank;
  for (long d : torsion) a.torsion.emplace_back(d);
  return a;
}

mpz_class AbelianInvariants::torsion_order() const {
  mpz_class order = 1;
  for (const auto& d : torsion) order *= d;
  return order;
}

std::string to_string(const AbelianInvariants& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (std::size_t i = 0; i < a.torsion.size();) {
    std::size_t j = i;
    while (j < a.torsion.size() && a.torsion[j] == a.torsion[i]) ++j;
    std::string part = "Z" + a.torsion[i].get_str();
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  if (parts.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " x " : "") << parts[i];
  return os.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, l.gen) += l.inverse ? -1 : 1;
  return m;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  auto diag = smith_normal_form(relation_matrix(p));
  AbelianInvariants a;
  a.free_rank = p.generator_count() - diag.size();
  for (auto& d : diag)
    if (d > 1) a.torsion.push_back(std::move(d));
  return a;
}

}  // namespace fpg
