#include "fpg/presentation.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace fpg {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.generator_bound() > names_.size())
      throw std::invalid_argument("relator references an unknown generator");
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

std::optional<std::uint32_t> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::vector<Word> Presentation::cyclically_reduced_relators() const {
  std::vector<Word> out;
  for (const auto& r : relators_) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected identifier" + found());
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  long signed_integer() {
    skip_space();
    const int line = line_, column = column_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      advance();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (start == pos_) fail("expected integer exponent" + found());
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) throw ParseError("exponent out of range", line, column);
    return negative ? -value : value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

bool starts_atom(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '('; }

Word parse_word_at(Cursor& in, const SymbolResolver& resolve);

Word parse_factor(Cursor& in, const SymbolResolver& resolve) {
  Word atom;
  if (in.accept('(')) {
    atom = parse_word_at(in, resolve);
    in.expect(')');
  } else {
    in.skip_space();
    const int l = in.line(), c = in.column();
    std::string name = in.identifier();
    auto symbol = resolve(name);
    if (!symbol) throw ParseError("unknown generator '" + name + "'", l, c);
    atom = Word{Letter{*symbol, false}};
  }
  if (in.accept('^')) {
    in.skip_space();
    const int l = in.line(), c = in.column();
    long e = in.signed_integer();
    try {
      return power(atom, e);
    } catch (const std::length_error&) {
      throw ParseError("exponent too large", l, c);
    }
  }
  return atom;
}

Word parse_word_at(Cursor& in, const SymbolResolver& resolve) {
  if (!starts_atom(in.peek())) in.fail("expected generator or '('");
  std::vector<Letter> letters;
  for (;;) {
    Word f = parse_factor(in, resolve);
    letters.insert(letters.end(), f.begin(), f.end());
    if (in.accept('*')) {
      if (!starts_atom(in.peek())) in.fail("expected generator or '(' after '*'");
      continue;
    }
    if (!starts_atom(in.peek())) break;
  }
  return free_reduce(letters);
}

SymbolResolver resolver_for(const Presentation& p) {
  return [&p](std::string_view name) { return p.find_generator(name); };
}

}  // namespace

Word parse_word(std::string_view text, const SymbolResolver& resolve, int first_line,
                int first_column) {
  Cursor in(text, first_line, first_column);
  Word w = parse_word_at(in, resolve);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return w;
}

Word parse_word(std::string_view text, const Presentation& p) {
  return parse_word(text, resolver_for(p));
}

std::vector<Word> parse_word_list(std::string_view text, const Presentation& p) {
  Cursor in(text, 1, 1);
  std::vector<Word> out;
  if (in.at_end()) return out;
  auto resolve = resolver_for(p);
  do {
    out.push_back(parse_word_at(in, resolve));
  } while (in.accept(','));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Cursor in(text, 1, 1);
  in.expect('<');
  std::vector<std::string> names;
  std::set<std::string> seen;
  if (in.peek() != '|') {
    do {
      in.skip_space();
      const int l = in.line(), c = in.column();
      std::string name = in.identifier();
      if (!seen.insert(name).second) throw ParseError("duplicate generator '" + name + "'", l, c);
      names.push_back(std::move(name));
    } while (in.accept(','));
  }
  in.expect('|');

  auto resolve = [&names](std::string_view name) -> std::optional<std::uint32_t> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
  };
  std::vector<Word> relators;
  if (in.peek() != '>') {
    do {
      relators.push_back(parse_word_at(in, resolve));
    } while (in.accept(','));
  }
  in.expect('>');
  if (!in.at_end()) in.fail("unexpected trailing input after '>'");
  return Presentation(std::move(names), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  const auto& names = p.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << (names.empty() ? "| " : " | ");
  const auto& rels = p.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    os << (i ? ",\n    " : "") << format_word(rels[i], names);
  }
  os << (rels.empty() ? ">" : " >");
  return os.str();
}

}  // namespace fpg
