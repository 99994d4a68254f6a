#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/word.hpp"

namespace fpg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  // The message without the "line:column:" prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

// Generators plus relators. Relators are freely reduced on construction and
// empty relators are dropped; the relator list is otherwise kept as given.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return names_.size(); }
  std::optional<std::uint32_t> find_generator(std::string_view name) const;

  // Relators cyclically reduced; used by the coset enumerator.
  std::vector<Word> cyclically_reduced_relators() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

bool is_identifier(std::string_view s);

// Maps an identifier to a symbol id, or nullopt if unknown.
using SymbolResolver = std::function<std::optional<std::uint32_t>(std::string_view)>;

// Parses `word` from the grammar, expanding powers and parenthesised
// subwords. Line/column in errors are offset by the given origin.
Word parse_word(std::string_view text, const SymbolResolver& resolve, int first_line = 1,
                int first_column = 1);
Word parse_word(std::string_view text, const Presentation& p);
// Comma separated words; empty input gives an empty list.
std::vector<Word> parse_word_list(std::string_view text, const Presentation& p);

Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

}  // namespace fpg
