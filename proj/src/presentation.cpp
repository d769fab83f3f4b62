#include "knotlog/presentation.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <utility>

#include "knotlog/error.hpp"

namespace knotlog {

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    skip_ws();
    expect('<');
    parse_generators(p);
    expect('|');
    skip_ws();
    if (peek() != '>') {
      p.relators.push_back(parse_relation());
      skip_ws();
      while (peek() == ',') {
        advance();
        p.relators.push_back(parse_relation());
        skip_ws();
      }
    }
    expect('>');
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(at_end() ? std::string("expected '") + c + "' but input ended"
                    : std::string("expected '") + c + "'");
    }
    advance();
  }

  static bool starts_symbol(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

  std::string parse_symbol() {
    if (!starts_symbol(peek())) fail("expected a generator name");
    std::string name;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name += peek();
      advance();
    }
    return name;
  }

  void parse_generators(Presentation& p) {
    for (;;) {
      skip_ws();
      std::size_t line = line_, column = column_;
      std::string name = parse_symbol();
      if (known_.count(name)) {
        throw ParseError("duplicate generator '" + name + "'", line, column);
      }
      known_.insert(name);
      p.generators.push_back(std::move(name));
      skip_ws();
      if (peek() != ',') break;
      advance();
    }
  }

  long parse_exponent() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
      skip_ws();
    }
    std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (begin == pos_) fail("expected an integer exponent");
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc()) fail("exponent out of range");
    return negative ? -value : value;
  }

  void parse_factor(std::vector<Letter>& raw) {
    if (peek() == '1') {
      advance();
      return;
    }
    std::size_t line = line_, column = column_;
    std::string name = parse_symbol();
    if (!known_.count(name)) {
      throw ParseError("unknown generator '" + name + "' in relator", line, column);
    }
    long exponent = 1;
    skip_ws();
    if (peek() == '^') {
      advance();
      exponent = parse_exponent();
    }
    raw.push_back(Letter{std::move(name), exponent});
  }

  Word parse_word() {
    std::vector<Letter> raw;
    skip_ws();
    parse_factor(raw);
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        advance();
        skip_ws();
        parse_factor(raw);
      } else if (starts_symbol(peek()) || peek() == '1') {
        parse_factor(raw);
      } else {
        break;
      }
    }
    return reduce(std::move(raw));
  }

  Word parse_relation() {
    Word lhs = parse_word();
    skip_ws();
    if (peek() != '=') return lhs;
    advance();
    Word rhs = parse_word();
    return multiply(lhs, invert(rhs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::set<std::string> known_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return PresentationParser(text).parse();
}

std::string render(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += p.relators[i].to_string();
  }
  out += p.relators.empty() ? ">" : " >";
  return out;
}

}  // namespace knotlog
