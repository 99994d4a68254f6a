#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

// Named word definitions over an ambient presentation. A definition may
// refer to generators and to other definitions; expansion substitutes
// recursively and rejects undefined or cyclic references.
//
// Entries keep insertion order. Anonymous entries (bare words in a words
// file) have an empty name and can only be reached by position.
class WordTable {
 public:
  struct Entry {
    std::string name;
    std::string source;  // "file:line" or empty
    Word body;           // symbols: generator ids, then kRefBase + reference id
  };

  explicit WordTable(Presentation ambient);

  const Presentation& ambient() const { return ambient_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool defines(std::string_view name) const { return by_name_.count(std::string(name)) != 0; }

  // Adds `name = text`. References to names not yet defined are allowed
  // here and resolved at expansion time.
  std::size_t define(std::string name, std::string_view text);

  Word expand(std::string_view name) const;
  Word expand_entry(std::size_t index) const;

  // Loads a words file: one `name = word` or bare `word` per line, `#`
  // comments, blank lines ignored. Names must be defined on earlier lines
  // (or earlier files). Returns the indices of the entries added.
  std::vector<std::size_t> load(std::string_view text, std::string_view source_name = {});

 private:
  static constexpr std::uint32_t kRefBase = 1u << 30;

  std::size_t add(std::string name, std::string source, Word body);
  std::uint32_t intern(std::string_view name);
  Word expand_symbols(const Word& body, std::vector<int>& state) const;
  Word expand_ref(std::uint32_t ref, std::vector<int>& state) const;

  Presentation ambient_;
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<std::string> refs_;  // interned reference names
  std::map<std::string, std::uint32_t, std::less<>> ref_ids_;
};

class WordTableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fpg
