#include "fpg/schreier_sims.hpp"

#include <stdexcept>

namespace fpg {

namespace {

bool fixes_prefix(const Permutation& g, const std::vector<std::uint32_t>& base, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (g(base[k]) != base[k]) return false;
  return true;
}

std::uint32_t first_moved(const Permutation& g) {
  std::uint32_t p = 0;
  while (g(p) == p) ++p;
  return p;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> strong;
  std::vector<std::uint32_t> base;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("StabilizerChain: generators differ in degree");
    if (g.is_identity()) continue;
    strong.push_back(g);
    if (fixes_prefix(g, base, base.size())) base.push_back(first_moved(g));
  }

  // Level i uses every strong generator fixing base[0..i-1].
  auto rebuild = [&](std::size_t i) {
    Level L;
    L.base = base[i];
    for (const Permutation& s : strong)
      if (fixes_prefix(s, base, i)) L.generators.push_back(s);
    L.transversal.assign(degree_, Permutation());
    L.transversal[L.base] = Permutation::identity(degree_);
    L.orbit.push_back(L.base);
    for (std::size_t k = 0; k < L.orbit.size(); ++k)
      for (const Permutation& s : L.generators) {
        const std::uint32_t next = s(L.orbit[k]);
        if (L.transversal[next].degree() != 0) continue;
        L.transversal[next] = L.transversal[L.orbit[k]] * s;
        L.orbit.push_back(next);
      }
    if (i < levels_.size())
      levels_[i] = std::move(L);
    else
      levels_.push_back(std::move(L));
  };
  for (std::size_t i = 0; i < base.size(); ++i) rebuild(i);

  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      const std::uint32_t beta = levels_[i].orbit[k];
      for (std::size_t s = 0; s < levels_[i].generators.size() && !restarted; ++s) {
        const Permutation& gen = levels_[i].generators[s];
        const std::uint32_t gamma = gen(beta);
        Permutation h = levels_[i].transversal[beta] * gen * levels_[i].transversal[gamma].inverse();
        // Sift through the deeper levels.
        std::size_t j = i + 1;
        for (; j < levels_.size(); ++j) {
          const std::uint32_t b = h(levels_[j].base);
          if (levels_[j].transversal[b].degree() == 0) break;
          h = h * levels_[j].transversal[b].inverse();
        }
        if (j == levels_.size() && h.is_identity()) continue;
        strong.push_back(h);
        if (j == levels_.size()) base.push_back(first_moved(h));
        for (std::size_t l = i + 1; l <= j; ++l) rebuild(l);
        i = j + 1;
        restarted = true;
      }
    }
  }
}

Permutation StabilizerChain::sift(Permutation g) const {
  for (const Level& L : levels_) {
    const std::uint32_t b = g(L.base);
    if (L.transversal[b].degree() == 0) return g;
    g = g * L.transversal[b].inverse();
  }
  return g;
}

mpz_class StabilizerChain::order() const {
  mpz_class n = 1;
  for (const Level& L : levels_) n *= static_cast<unsigned long>(L.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> out;
  for (const Level& L : levels_) out.push_back(L.base);
  return out;
}

mpz_class group_order(std::span<const Permutation> generators) {
  if (generators.empty()) return 1;
  return StabilizerChain(generators.front().degree(), generators).order();
}

}  // namespace fpg
