#include "fpg/word_table.hpp"

#include <algorithm>

namespace fpg {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

WordTable::WordTable(Presentation ambient) : ambient_(std::move(ambient)) {}

std::uint32_t WordTable::intern(std::string_view name) {
  auto it = ref_ids_.find(name);
  if (it != ref_ids_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(refs_.size());
  refs_.emplace_back(name);
  ref_ids_.emplace(std::string(name), id);
  return id;
}

std::size_t WordTable::add(std::string name, std::string source, Word body) {
  if (!name.empty()) {
    if (!is_identifier(name)) throw WordTableError("invalid name '" + name + "'");
    if (ambient_.find_generator(name))
      throw WordTableError("name '" + name + "' shadows a generator");
    if (by_name_.count(name)) throw WordTableError("name '" + name + "' defined twice");
    by_name_.emplace(name, entries_.size());
  }
  entries_.push_back({std::move(name), std::move(source), std::move(body)});
  return entries_.size() - 1;
}

std::size_t WordTable::define(std::string name, std::string_view text) {
  Word body;
  if (!trim(text).empty()) {
    body = parse_word(text, [this](std::string_view id) -> std::optional<std::uint32_t> {
      if (auto g = ambient_.find_generator(id)) return g;
      return kRefBase + intern(id);
    });
  }
  return add(std::move(name), {}, std::move(body));
}

Word WordTable::expand_ref(std::uint32_t ref, std::vector<int>& state) const {
  const std::string& name = refs_.at(ref);
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw WordTableError("undefined name '" + name + "'");
  const std::size_t index = it->second;
  if (state[index] == 1) throw WordTableError("cyclic definition involving '" + name + "'");
  state[index] = 1;
  Word out = expand_symbols(entries_[index].body, state);
  state[index] = 0;
  return out;
}

Word WordTable::expand_symbols(const Word& body, std::vector<int>& state) const {
  std::vector<Letter> letters;
  for (Letter l : body) {
    if (l.gen < kRefBase) {
      letters.push_back(l);
      continue;
    }
    Word sub = expand_ref(l.gen - kRefBase, state);
    if (l.inverse) sub = invert(sub);
    letters.insert(letters.end(), sub.begin(), sub.end());
  }
  return free_reduce(letters);
}

Word WordTable::expand(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw WordTableError("undefined name '" + std::string(name) + "'");
  return expand_entry(it->second);
}

Word WordTable::expand_entry(std::size_t index) const {
  std::vector<int> state(entries_.size(), 0);
  state.at(index) = 1;
  return expand_symbols(entries_[index].body, state);
}

std::vector<std::size_t> WordTable::load(std::string_view text, std::string_view source_name) {
  std::vector<std::size_t> added;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    std::string name;
    std::string_view rhs = line;
    int rhs_column = 1;
    if (auto eq = line.find('='); eq != std::string_view::npos) {
      name = std::string(trim(line.substr(0, eq)));
      if (!is_identifier(name)) {
        auto col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
        throw ParseError("invalid definition name '" + name + "'", line_no, col);
      }
      rhs = line.substr(eq + 1);
      rhs_column = static_cast<int>(eq) + 2;
    }

    Word body;
    if (!trim(rhs).empty()) {
      body = parse_word(
          rhs,
          [this](std::string_view id) -> std::optional<std::uint32_t> {
            if (auto g = ambient_.find_generator(id)) return g;
            if (by_name_.count(std::string(id))) return kRefBase + intern(id);
            return std::nullopt;
          },
          line_no, rhs_column);
    } else if (name.empty()) {
      continue;
    }
    std::string source = std::string(source_name) + ":" + std::to_string(line_no);
    try {
      added.push_back(add(std::move(name), std::move(source), std::move(body)));
    } catch (const WordTableError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  return added;
}

}  // namespace fpg
