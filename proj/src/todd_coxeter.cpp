#include "fpg/todd_coxeter.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fpg {

EnumerationLimitExceeded::EnumerationLimitExceeded(std::size_t max_cosets)
    : std::runtime_error("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets"),
      max_cosets_(max_cosets) {}

namespace {

using Columns = std::vector<std::uint32_t>;

Columns to_columns(const Word& w) {
  Columns out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(static_cast<std::uint32_t>(l.column()));
  return out;
}

// Coset enumeration over a growable dense table. Dead cosets keep their row
// until the next compaction; parent_ is the union-find forest recording
// which coset a dead one was merged into.
class Enumerator {
 public:
  Enumerator(std::size_t cols, std::vector<Columns> relators, std::vector<Columns> subgens,
             const EnumerationLimits& limits, EnumerationStats& stats)
      : cols_(cols),
        relators_(std::move(relators)),
        subgens_(std::move(subgens)),
        limits_(limits),
        stats_(stats),
        felsch_(limits.strategy == Strategy::felsch) {
    if (felsch_) build_rotations();
    new_coset();
  }

  std::vector<Coset> run() {
    if (felsch_)
      run_felsch();
    else
      run_hlt();
    compact(0);
    return std::vector<Coset>(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n_ * cols_));
  }

 private:
  enum class ScanResult { done, need_space };

  Coset& at(Coset c, std::size_t col) { return table_[std::size_t(c) * cols_ + col]; }
  bool is_live(Coset c) const { return parent_[c] == c; }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      Coset next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  Coset new_coset() {
    const auto c = static_cast<Coset>(n_++);
    table_.resize(n_ * cols_, kUndefined);
    parent_.push_back(c);
    ++live_;
    ++stats_.cosets_defined;
    stats_.max_live = std::max(stats_.max_live, live_);
    return c;
  }

  void set_entry(Coset a, std::size_t col, Coset b) {
    at(a, col) = b;
    at(b, col ^ 1) = a;
    if (felsch_) deductions_.emplace_back(a, col);
  }

  void define(Coset a, std::size_t col) { set_entry(a, col, new_coset()); }

  ScanResult scan_and_fill(Coset a, const Columns& w) {
    Coset f = a, b = a;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        coincidence(f, b);
        return ScanResult::done;
      }
      while (j > i && at(b, w[j - 1] ^ 1) != kUndefined) b = at(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return ScanResult::done;
      }
      if (j == i + 1) {
        set_entry(f, w[i], b);
        return ScanResult::done;
      }
      if (n_ >= limits_.max_cosets) return ScanResult::need_space;
      define(f, w[i]);
    }
  }

  // Scan without defining: records a deduction when exactly one entry is
  // missing, a coincidence when the word closes on two different cosets.
  void scan(Coset a, const Columns& w) {
    Coset f = a, b = a;
    std::size_t i = 0, j = w.size();
    while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
    if (i == j) {
      coincidence(f, b);
      return;
    }
    while (j > i && at(b, w[j - 1] ^ 1) != kUndefined) b = at(b, w[--j] ^ 1);
    if (j == i)
      coincidence(f, b);
    else if (j == i + 1)
      set_entry(f, w[i], b);
  }

  void merge(Coset k, Coset l, std::vector<Coset>& queue) {
    Coset phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    Coset mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(Coset a, Coset b) {
    if (a == b) return;
    ++stats_.coincidences;
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Coset g = queue[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        const Coset d = at(g, col);
        if (d == kUndefined) continue;
        at(d, col ^ 1) = kUndefined;
        const Coset mu = rep(g), nu = rep(d);
        if (at(mu, col) != kUndefined)
          merge(nu, at(mu, col), queue);
        else if (at(nu, col ^ 1) != kUndefined)
          merge(mu, at(nu, col ^ 1), queue);
        else
          set_entry(mu, col, nu);
      }
    }
    live_ -= queue.size();
    if (limits_.check_consistency) check_consistency();
  }

  void check_consistency() {
    for (Coset c = 0; c < n_; ++c) {
      if (!is_live(c)) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        Coset d = at(c, col);
        if (d == kUndefined) continue;
        if (!is_live(d) || at(d, col ^ 1) != c)
          throw std::logic_error("todd_coxeter: coset table inconsistent after coincidence");
      }
    }
  }

  void lookahead() {
    ++stats_.lookaheads;
    for (Coset c = 0; c < n_; ++c) {
      for (const auto& r : relators_) {
        if (!is_live(c)) break;
        scan(c, r);
      }
    }
  }

  // Renumbers live cosets to 0..live-1 preserving order. Returns the new
  // number of the first live coset at or after `keep`.
  Coset compact(Coset keep) {
    std::vector<Coset> to_new(n_, kUndefined);
    Coset next = 0, kept = kUndefined;
    for (Coset c = 0; c < n_; ++c) {
      if (c == keep) kept = next;
      if (is_live(c)) to_new[c] = next++;
    }
    if (kept == kUndefined) kept = next;
    for (Coset c = 0; c < n_; ++c) {
      if (!is_live(c)) continue;
      const Coset nc = to_new[c];
      for (std::size_t col = 0; col < cols_; ++col) {
        Coset d = at(c, col);
        table_[std::size_t(nc) * cols_ + col] = d == kUndefined ? kUndefined : to_new[d];
      }
    }
    for (auto& [c, col] : deductions_) c = is_live(c) ? to_new[c] : kUndefined;
    std::erase_if(deductions_, [](const auto& d) { return d.first == kUndefined; });
    n_ = next;
    table_.resize(n_ * cols_);
    parent_.resize(n_);
    for (Coset c = 0; c < n_; ++c) parent_[c] = c;
    live_ = n_;
    return kept;
  }

  Coset make_space(Coset position) {
    if (!felsch_) lookahead();
    Coset p = compact(position);
    if (n_ >= limits_.max_cosets) throw EnumerationLimitExceeded(limits_.max_cosets);
    return p;
  }

  void run_hlt() {
    for (const auto& w : subgens_)
      while (scan_and_fill(0, w) == ScanResult::need_space) make_space(0);
    Coset a = 0;
    while (a < n_) {
      if (!process_hlt_coset(a)) {
        a = make_space(a);
        continue;
      }
      ++a;
    }
  }

  // False when the table ran out of room before the coset was finished.
  bool process_hlt_coset(Coset a) {
    for (const auto& r : relators_) {
      if (!is_live(a)) return true;
      if (scan_and_fill(a, r) == ScanResult::need_space) return false;
    }
    if (!is_live(a)) return true;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (at(a, col) != kUndefined) continue;
      if (n_ >= limits_.max_cosets) return false;
      define(a, col);
    }
    return true;
  }

  void build_rotations() {
    by_column_.assign(cols_, {});
    std::set<Columns> seen;
    for (const auto& r : relators_) {
      Columns inverse;
      for (auto it = r.rbegin(); it != r.rend(); ++it) inverse.push_back(*it ^ 1);
      for (const Columns* w : {&r, static_cast<const Columns*>(&inverse)}) {
        for (std::size_t s = 0; s < w->size(); ++s) {
          Columns rot(w->begin() + static_cast<std::ptrdiff_t>(s), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(rot).second) by_column_[rot.front()].push_back(rot);
        }
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!is_live(c)) continue;
      for (const auto& r : by_column_[col]) {
        if (!is_live(c)) break;
        scan(c, r);
      }
      if (!is_live(c) || at(c, col) == kUndefined) continue;
      const Coset d = at(c, col);
      for (const auto& r : by_column_[col ^ 1]) {
        if (!is_live(d)) break;
        scan(d, r);
      }
    }
  }

  void run_felsch() {
    for (const auto& w : subgens_) {
      while (scan_and_fill(0, w) == ScanResult::need_space) {
        process_deductions();
        make_space(0);
      }
      process_deductions();
    }
    process_deductions();
    Coset a = 0;
    std::size_t col = 0;
    for (;;) {
      while (a < n_ && (!is_live(a) || at(a, col) != kUndefined)) {
        if (++col == cols_) {
          col = 0;
          ++a;
        }
      }
      if (a >= n_) break;
      if (n_ >= limits_.max_cosets) {
        a = make_space(a);
        col = 0;
        continue;
      }
      const std::size_t before = stats_.coincidences;
      define(a, col);
      process_deductions();
      if (stats_.coincidences != before) {
        a = 0;
        col = 0;
      }
    }
  }

  std::size_t cols_;
  std::vector<Columns> relators_;
  std::vector<Columns> subgens_;
  EnumerationLimits limits_;
  EnumerationStats& stats_;
  bool felsch_ = false;

  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::size_t n_ = 0;
  std::size_t live_ = 0;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
  std::vector<std::vector<Columns>> by_column_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_generators,
                        const EnumerationLimits& limits, EnumerationStats* stats) {
  if (limits.max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  std::vector<Word> subgens(subgroup_generators.begin(), subgroup_generators.end());
  for (const auto& w : subgens)
    if (w.generator_bound() > p.generator_count())
      throw std::invalid_argument("todd_coxeter: subgroup generator uses an unknown generator");
  if (p.generator_count() == 0) return CosetTable(0, {}, std::move(subgens));

  std::vector<Columns> relators, subgen_columns;
  for (const auto& r : p.cyclically_reduced_relators()) relators.push_back(to_columns(r));
  for (const auto& w : subgens) {
    Word reduced = free_reduce(w);
    if (!reduced.empty()) subgen_columns.push_back(to_columns(reduced));
  }

  EnumerationStats local;
  Enumerator e(2 * p.generator_count(), std::move(relators), std::move(subgen_columns), limits,
               stats ? *stats : local);
  auto entries = e.run();
  return standardize(CosetTable(p.generator_count(), std::move(entries), std::move(subgens)));
}

}  // namespace fpg
