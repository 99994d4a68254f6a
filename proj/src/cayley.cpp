#include "fpg/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fpg/todd_coxeter.hpp"

namespace fpg {

CayleyTable::CayleyTable(std::vector<std::vector<Label>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw std::invalid_argument("CayleyTable: empty table");
  std::vector<bool> seen(n);
  for (const auto& row : rows_) {
    if (row.size() != n) throw std::invalid_argument("CayleyTable: table is not square");
    std::fill(seen.begin(), seen.end(), false);
    for (Label x : row) {
      if (x >= n || seen[x]) throw std::invalid_argument("CayleyTable: row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[rows_[r][col]]) throw std::invalid_argument("CayleyTable: column is not a permutation");
      seen[rows_[r][col]] = true;
    }
  }
  for (Label a = 0; a < n; ++a)
    if (rows_[0][a] != a || rows_[a][0] != a) throw std::invalid_argument("CayleyTable: 0 is not the identity");
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (rows_[rows_[a][b]][c] != rows_[a][rows_[b][c]])
          throw std::invalid_argument("CayleyTable: multiplication is not associative");
}

Label CayleyTable::inverse(Label a) const {
  const auto& row = rows_[a];
  return static_cast<Label>(std::find(row.begin(), row.end(), Label{0}) - row.begin());
}

std::uint64_t CayleyTable::element_order(Label a) const {
  std::uint64_t k = 1;
  for (Label x = a; x != 0; x = rows_[x][a]) ++k;
  return k;
}

std::string format_cayley(const CayleyTable& c) {
  std::ostringstream os;
  os << c.order() << '\n';
  for (const auto& row : c.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << '\n';
  }
  return os.str();
}

CayleyTable parse_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n)) throw std::invalid_argument("parse_cayley: missing order");
  std::vector<std::vector<Label>> rows(n, std::vector<Label>(n));
  for (auto& row : rows)
    for (auto& x : row)
      if (!(in >> x)) throw std::invalid_argument("parse_cayley: too few entries");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("parse_cayley: trailing data");
  return CayleyTable(std::move(rows));
}

CayleyTable relabel(const CayleyTable& c, const std::vector<Label>& perm) {
  const std::size_t n = c.order();
  if (perm.size() != n || perm[0] != 0) throw std::invalid_argument("relabel: permutation must fix 0");
  std::vector<std::vector<Label>> rows(n, std::vector<Label>(n));
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) rows[perm[a]][perm[b]] = perm[c(a, b)];
  return CayleyTable(std::move(rows));
}

CayleyTable random_relabel(const CayleyTable& c, std::mt19937& rng) {
  std::vector<Label> perm(c.order());
  std::iota(perm.begin(), perm.end(), Label{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return relabel(c, perm);
}

std::vector<Coset> fixed_cosets(const CosetTable& t) {
  if (!t.is_complete()) throw std::invalid_argument("fixed_cosets: table is incomplete");
  std::vector<Coset> out;
  for (Coset c = 0; c < t.index(); ++c) {
    const auto& gens = t.subgroup_generators();
    if (std::all_of(gens.begin(), gens.end(), [&](const Word& h) { return trace(t, c, h) == c; }))
      out.push_back(c);
  }
  return out;
}

NormalizerIndex normalizer_index(const CosetTable& t) {
  const std::size_t fixed = fixed_cosets(t).size();
  if (t.index() % fixed != 0) throw std::logic_error("normalizer_index: fixed-coset count does not divide the index");
  return {fixed, t.index() / fixed};
}

CayleyTable quotient_on_fixed(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    throw std::invalid_argument("quotient_on_fixed: table does not match the presentation");
  if (!t.is_standard()) throw std::invalid_argument("quotient_on_fixed: table is not standardized");
  const auto fixed = fixed_cosets(t);
  const auto reps = representatives(t);
  std::vector<long> label(t.index(), -1);
  for (std::size_t k = 0; k < fixed.size(); ++k) label[fixed[k]] = static_cast<long>(k);
  std::vector<std::vector<Label>> rows(fixed.size(), std::vector<Label>(fixed.size()));
  for (std::size_t a = 0; a < fixed.size(); ++a)
    for (std::size_t b = 0; b < fixed.size(); ++b) {
      const long image = label[trace(t, fixed[a], reps[fixed[b]])];
      if (image < 0) throw std::logic_error("quotient_on_fixed: fixed cosets are not closed");
      rows[a][b] = static_cast<Label>(image);
    }
  return CayleyTable(std::move(rows));
}

CayleyTable regular_cayley(const Presentation& p) {
  const CosetTable t = todd_coxeter(p, {});
  return quotient_on_fixed(p, t);
}

std::vector<Label> subgroup_closure(const CayleyTable& c, const std::vector<Label>& gens) {
  std::vector<bool> in(c.order(), false);
  std::vector<Label> elems{0};
  in[0] = true;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (Label g : gens) {
      if (g >= c.order()) throw std::out_of_range("subgroup_closure: label out of range");
      const Label x = c(elems[k], g);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const CayleyTable& c, const std::vector<Label>& subset) {
  std::vector<bool> in(c.order(), false);
  for (Label x : subset) {
    if (x >= c.order()) return false;
    in[x] = true;
  }
  if (subset.empty() || !in[0]) return false;
  for (Label a : subset) {
    if (!in[c.inverse(a)]) return false;
    for (Label b : subset)
      if (!in[c(a, b)]) return false;
  }
  return true;
}

bool is_normal_in(const CayleyTable& c, const std::vector<Label>& subset) {
  if (!is_subgroup(c, subset)) throw std::invalid_argument("is_normal_in: subset is not a subgroup");
  std::vector<bool> in(c.order(), false);
  for (Label x : subset) in[x] = true;
  for (Label g = 0; g < c.order(); ++g)
    for (Label s : subset)
      if (!in[c(c(g, s), c.inverse(g))]) return false;
  return true;
}

std::vector<Label> derived_subgroup(const CayleyTable& c) {
  std::vector<Label> commutators;
  for (Label a = 0; a < c.order(); ++a)
    for (Label b = 0; b < c.order(); ++b)
      commutators.push_back(c(c(c.inverse(a), c.inverse(b)), c(a, b)));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return subgroup_closure(c, commutators);
}

std::vector<Label> center(const CayleyTable& c) {
  std::vector<Label> out;
  for (Label a = 0; a < c.order(); ++a) {
    bool central = true;
    for (Label b = 0; b < c.order() && central; ++b) central = c(a, b) == c(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::size_t abelianization_order(const CayleyTable& c) { return c.order() / derived_subgroup(c).size(); }

bool is_abelian(const CayleyTable& c) { return center(c).size() == c.order(); }

}  // namespace fpg
