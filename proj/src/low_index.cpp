#include "fpg/low_index.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fpg/reidemeister_schreier.hpp"
#include "fpg/todd_coxeter.hpp"

namespace fpg {

namespace {

using Columns = std::vector<std::uint32_t>;

bool table_less(const CosetTable& a, const CosetTable& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return a.entries() < b.entries();
}

class SimsSearch {
 public:
  SimsSearch(const Presentation& p, const SubgroupSearchOptions& opts)
      : p_(p), opts_(opts), cols_(2 * p.generator_count()), cap_(opts.max_index) {
    if (opts.exact_index) cap_ = std::min(cap_, *opts.exact_index);
    by_column_.resize(cols_);
    for (const Word& r : p.cyclically_reduced_relators()) {
      for (const Word& base : {r, invert(r)}) {
        for (const Word& rot : rotations(base)) {
          Columns c;
          for (Letter l : rot) c.push_back(static_cast<std::uint32_t>(l.column()));
          by_column_[c.front()].push_back(std::move(c));
        }
      }
    }
    for (auto& list : by_column_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    table_.assign(cap_ * cols_, kUndefined);
  }

  SubgroupSearchResult run() {
    SubgroupSearchResult out;
    if (cols_ == 0) {
      if (!opts_.exact_index || *opts_.exact_index == 1)
        out.classes.push_back(with_schreier_subgroup(p_, CosetTable(0, {}, {})));
      return out;
    }
    active_ = 1;
    search();
    out.complete = !stopped_;
    out.nodes = nodes_;
    out.classes = std::move(found_);
    std::sort(out.classes.begin(), out.classes.end(), table_less);
    return out;
  }

 private:
  Coset& at(Coset c, std::size_t col) { return table_[c * cols_ + col]; }
  Coset get(Coset c, std::size_t col) const { return table_[c * cols_ + col]; }

  void assign(Coset a, std::size_t col, Coset b) {
    at(a, col) = b;
    trail_.push_back(a * cols_ + col);
    if (get(b, col ^ 1) == kUndefined) {
      at(b, col ^ 1) = a;
      trail_.push_back(b * cols_ + (col ^ 1));
    }
    queue_.emplace_back(a, col);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = kUndefined;
      trail_.pop_back();
    }
  }

  // Scans a relator rotation from coset c, filling a single gap. False on
  // a contradiction.
  bool scan(Coset c, const Columns& r) {
    std::size_t i = 0, j = r.size();
    Coset f = c, b = c;
    while (i < j) {
      const Coset next = get(f, r[i]);
      if (next == kUndefined) break;
      f = next;
      ++i;
    }
    if (i == j) return f == c;
    while (j > i) {
      const Coset next = get(b, r[j - 1] ^ 1);
      if (next == kUndefined) break;
      b = next;
      --j;
    }
    if (j == i) return f == b;
    if (j == i + 1) {
      if (get(b, r[i] ^ 1) != kUndefined) return false;
      assign(f, r[i], b);
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const auto [c, col] = queue_.back();
      queue_.pop_back();
      for (const Columns& r : by_column_[col])
        if (!scan(c, r)) return false;
      const Coset d = get(c, col);
      for (const Columns& r : by_column_[col ^ 1])
        if (!scan(d, r)) return false;
    }
    return true;
  }

  // Compares the table restandardized from coset g with the current one.
  // -1: rebased table is smaller on a determined prefix, 1: larger, 0: undecided.
  int compare_rebased(Coset g) {
    std::vector<Coset> label(active_, kUndefined), order;
    order.reserve(active_);
    label[g] = 0;
    order.push_back(g);
    for (Coset r = 0; r < active_; ++r) {
      if (r >= order.size()) return 0;
      const Coset src = order[r];
      for (std::size_t col = 0; col < cols_; ++col) {
        const Coset mine = get(r, col);
        const Coset theirs = get(src, col);
        if (mine == kUndefined || theirs == kUndefined) return 0;
        if (label[theirs] == kUndefined) {
          label[theirs] = static_cast<Coset>(order.size());
          order.push_back(theirs);
        }
        if (label[theirs] != mine) return label[theirs] < mine ? -1 : 1;
      }
    }
    return 0;
  }

  bool canonical() {
    for (Coset g = 1; g < active_; ++g)
      if (compare_rebased(g) < 0) return false;
    return true;
  }

  bool normal_complete() {
    for (Coset g = 1; g < active_; ++g)
      if (compare_rebased(g) != 0) return false;
    return true;
  }

  void record() {
    if (opts_.exact_index && active_ != *opts_.exact_index) return;
    if (opts_.normal_only && !normal_complete()) return;
    std::vector<Coset> entries(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(active_ * cols_));
    CosetTable t(p_.generator_count(), std::move(entries), {});
    if (!satisfies(t, p_)) throw std::logic_error("low_index: completed table violates a relator");
    found_.push_back(with_schreier_subgroup(p_, t));
  }

  void search() {
    if (stopped_) return;
    std::size_t pos = 0;
    const std::size_t filled = active_ * cols_;
    while (pos < filled && table_[pos] != kUndefined) ++pos;
    if (pos == filled) {
      record();
      return;
    }
    const auto c = static_cast<Coset>(pos / cols_);
    const std::size_t col = pos % cols_;
    const std::size_t limit = active_ < cap_ ? active_ + 1 : active_;
    for (Coset target = 0; target < limit; ++target) {
      if (target < active_ && get(target, col ^ 1) != kUndefined) continue;
      if (opts_.node_budget && nodes_ >= *opts_.node_budget) {
        stopped_ = true;
        return;
      }
      ++nodes_;
      const std::size_t mark = trail_.size();
      const std::size_t saved_active = active_;
      if (target == active_) ++active_;
      queue_.clear();
      assign(c, col, target);
      if (propagate() && canonical()) search();
      queue_.clear();
      undo(mark);
      active_ = saved_active;
      if (stopped_) return;
    }
  }

  const Presentation& p_;
  const SubgroupSearchOptions& opts_;
  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::vector<Columns>> by_column_;
  std::vector<Coset> table_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<Coset, std::size_t>> queue_;
  Coset active_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<CosetTable> found_;
};

}  // namespace

CosetTable with_schreier_subgroup(const Presentation& p, const CosetTable& t) {
  std::vector<Word> gens;
  for (auto& s : schreier_generators(p, t))
    if (!s.trivial) gens.push_back(std::move(s.word));
  return CosetTable(t.generator_count(), t.entries(), std::move(gens));
}

SubgroupSearchResult low_index_subgroups(const Presentation& p, const SubgroupSearchOptions& opts) {
  if (opts.max_index < 1) throw std::invalid_argument("low_index_subgroups: max_index must be at least 1");
  if (opts.exact_index && (*opts.exact_index < 1 || *opts.exact_index > opts.max_index))
    throw std::invalid_argument("low_index_subgroups: exact_index must lie in [1, max_index]");
  return SimsSearch(p, opts).run();
}

std::vector<std::size_t> classes_containing(const Presentation& p, std::span<const CosetTable> classes,
                                            std::span<const Word> gens) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].generator_count() != p.generator_count())
      throw std::invalid_argument("classes_containing: table does not match the presentation");
    if (std::all_of(gens.begin(), gens.end(), [&](const Word& w) { return contains(classes[i], w); }))
      out.push_back(i);
  }
  return out;
}

std::vector<CosetTable> normal_subgroups_abelian_quotient(const Presentation& p, std::size_t index) {
  if (index == 0) throw std::invalid_argument("normal_subgroups_abelian_quotient: index must be positive");
  const std::size_t n = p.generator_count();
  if (n == 0) {
    if (index != 1) return {};
    return {with_schreier_subgroup(p, CosetTable(0, {}, {}))};
  }

  // B = G / [G,G] G^index is finite; its regular table gives the group law.
  std::vector<Word> rels(p.relators());
  for (std::uint32_t a = 0; a < n; ++a) {
    rels.push_back(power(Word{gen(a)}, static_cast<long>(index)));
    for (std::uint32_t b = a + 1; b < n; ++b)
      rels.push_back(Word{inv(a), inv(b), gen(a), gen(b)});
  }
  const Presentation quotient(p.generator_names(), std::move(rels));
  const CosetTable regular = todd_coxeter(quotient, {});
  const std::size_t order = regular.index();
  if (order % index != 0) return {};
  const std::size_t target = order / index;
  const auto reps = representatives(regular);
  auto mult = [&](Coset x, Coset y) { return trace(regular, x, reps[y]); };

  // Subgroups of B as sorted element lists, grown by adjoining elements.
  auto closure = [&](std::vector<Coset> elems, Coset extra) {
    std::vector<bool> in(order, false);
    for (Coset e : elems) in[e] = true;
    std::vector<Coset> frontier;
    if (!in[extra]) {
      in[extra] = true;
      elems.push_back(extra);
      frontier.push_back(extra);
    }
    while (!frontier.empty()) {
      const Coset x = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0, m = elems.size(); k < m; ++k) {
        const Coset y = mult(x, elems[k]);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
          frontier.push_back(y);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  };

  std::set<std::vector<Coset>> seen{{0}};
  std::vector<std::vector<Coset>> stack{{0}}, hits;
  while (!stack.empty()) {
    auto s = std::move(stack.back());
    stack.pop_back();
    if (s.size() == target) hits.push_back(s);
    if (s.size() >= target) continue;
    for (Coset e = 0; e < order; ++e) {
      if (std::binary_search(s.begin(), s.end(), e)) continue;
      auto bigger = closure(s, e);
      if (bigger.size() > target || target % bigger.size() != 0) continue;
      if (seen.insert(bigger).second) stack.push_back(std::move(bigger));
    }
  }

  std::vector<CosetTable> out;
  for (const auto& s : hits) {
    // Label each coset of s in B by its first element, then act on labels.
    std::vector<Coset> cls(order, kUndefined);
    Coset next = 0;
    for (Coset x = 0; x < order; ++x) {
      if (cls[x] != kUndefined) continue;
      for (Coset e : s) cls[mult(x, e)] = next;
      ++next;
    }
    std::vector<Coset> rep_of(next);
    for (Coset x = order; x-- > 0;) rep_of[cls[x]] = x;
    std::vector<Coset> entries(next * 2 * n);
    for (Coset k = 0; k < next; ++k)
      for (std::size_t col = 0; col < 2 * n; ++col) entries[k * 2 * n + col] = cls[regular(rep_of[k], col)];
    out.push_back(with_schreier_subgroup(p, standardize(CosetTable(n, std::move(entries), {}))));
  }
  std::sort(out.begin(), out.end(), table_less);
  return out;
}

}  // namespace fpg
