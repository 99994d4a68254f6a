#include "fpg/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace fpg {

CosetTable::CosetTable(std::size_t n_generators, std::vector<Coset> entries,
                       std::vector<Word> subgroup_generators)
    : n_generators_(n_generators),
      entries_(std::move(entries)),
      subgroup_generators_(std::move(subgroup_generators)) {
  if (n_generators_ == 0) {
    if (!entries_.empty()) throw std::invalid_argument("CosetTable: entries without generators");
    return;
  }
  if (entries_.empty() || entries_.size() % column_count() != 0)
    throw std::invalid_argument("CosetTable: entry count is not a multiple of the column count");
  const std::size_t n = index();
  for (Coset c = 0; c < n; ++c) {
    for (std::size_t col = 0; col < column_count(); ++col) {
      Coset d = (*this)(c, col);
      if (d == kUndefined) continue;
      if (d >= n) throw std::invalid_argument("CosetTable: entry out of range");
      Coset back = (*this)(d, col ^ 1);
      if (back != kUndefined && back != c)
        throw std::invalid_argument("CosetTable: inconsistent inverse columns");
    }
  }
}

bool CosetTable::is_complete() const {
  return std::find(entries_.begin(), entries_.end(), kUndefined) == entries_.end();
}

CosetTable standardize(const CosetTable& t) {
  if (!t.is_complete()) throw std::logic_error("standardize: table is not complete");
  const std::size_t n = t.index(), cols = t.column_count();
  if (cols == 0) return t;
  std::vector<Coset> to_new(n, kUndefined), to_old;
  to_old.reserve(n);
  to_new[0] = 0;
  to_old.push_back(0);
  for (std::size_t next = 0; next < to_old.size(); ++next) {
    for (std::size_t col = 0; col < cols; ++col) {
      Coset d = t(to_old[next], col);
      if (to_new[d] == kUndefined) {
        to_new[d] = static_cast<Coset>(to_old.size());
        to_old.push_back(d);
      }
    }
  }
  if (to_old.size() != n) throw std::logic_error("standardize: table is not transitive");
  std::vector<Coset> entries(n * cols);
  for (Coset c = 0; c < n; ++c)
    for (std::size_t col = 0; col < cols; ++col) entries[c * cols + col] = to_new[t(to_old[c], col)];
  return CosetTable(t.generator_count(), std::move(entries), t.subgroup_generators());
}

bool CosetTable::is_standard() const {
  if (!is_complete()) return false;
  if (column_count() == 0) return true;
  return standardize(*this).entries_ == entries_;
}

Coset trace(const CosetTable& t, Coset start, const Word& w) {
  if (start >= t.index()) throw std::out_of_range("trace: coset out of range");
  Coset c = start;
  for (Letter l : w) {
    if (l.gen >= t.generator_count()) throw std::out_of_range("trace: generator out of range");
    c = t.act(c, l);
    if (c == kUndefined) throw std::logic_error("trace: undefined table entry");
  }
  return c;
}

bool contains(const CosetTable& t, const Word& w) { return trace(t, 0, w) == 0; }

std::vector<Permutation> coset_action(const CosetTable& t) {
  if (!t.is_complete()) throw std::logic_error("coset_action: table is not complete");
  std::vector<Permutation> out;
  const std::size_t n = t.index();
  for (std::size_t g = 0; g < t.generator_count(); ++g) {
    std::vector<std::uint32_t> images(n);
    for (Coset c = 0; c < n; ++c) images[c] = t(c, 2 * g);
    out.emplace_back(std::move(images));
  }
  return out;
}

std::vector<Word> representatives(const CosetTable& t) {
  if (!t.is_complete()) throw std::logic_error("representatives: table is not complete");
  const std::size_t n = t.index();
  std::vector<Word> reps(n);
  std::vector<bool> seen(n, false);
  std::deque<Coset> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    Coset c = queue.front();
    queue.pop_front();
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      Coset d = t(c, col);
      if (seen[d]) continue;
      seen[d] = true;
      Word r = reps[c];
      r.push_back(Letter::from_column(col));
      reps[d] = free_reduce(r);
      queue.push_back(d);
    }
  }
  return reps;
}

bool is_normal(const CosetTable& t) {
  for (const Word& h : t.subgroup_generators())
    for (Coset c = 0; c < t.index(); ++c)
      if (trace(t, c, h) != c) return false;
  return true;
}

bool satisfies(const CosetTable& t, const Presentation& p) {
  if (!t.is_complete() || p.generator_count() != t.generator_count()) return false;
  for (const Word& r : p.relators())
    for (Coset c = 0; c < t.index(); ++c)
      if (trace(t, c, r) != c) return false;
  for (const Word& h : t.subgroup_generators())
    if (h.generator_bound() > t.generator_count() || trace(t, 0, h) != 0) return false;
  return true;
}

std::string format_table(const CosetTable& t) {
  std::ostringstream os;
  for (Coset c = 0; c < t.index(); ++c) {
    auto row = t.row(c);
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (col) os << ' ';
      if (row[col] == kUndefined)
        os << '-';
      else
        os << row[col];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fpg
