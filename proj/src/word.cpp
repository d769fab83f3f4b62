#include "knotlog/word.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace knotlog {

namespace {

// Appends a letter to an already reduced stack, merging and cancelling
// against the top as needed.
void push_letter(std::vector<Letter>& stack, Letter letter) {
  if (letter.exponent == 0) return;
  if (!stack.empty() && stack.back().symbol == letter.symbol) {
    stack.back().exponent += letter.exponent;
    if (stack.back().exponent == 0) stack.pop_back();
    return;
  }
  stack.push_back(std::move(letter));
}

}  // namespace

bool is_valid_symbol(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word Word::generator(Symbol symbol, long exponent) {
  return reduce({Letter{std::move(symbol), exponent}});
}

long Word::length() const {
  long total = 0;
  for (const auto& l : letters_) total += l.exponent < 0 ? -l.exponent : l.exponent;
  return total;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += '*';
    out += l.symbol;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

Word reduce(std::vector<Letter> raw) {
  // A single stack pass reaches the fixed point: after each push the stack
  // is reduced, so cancellation can only cascade at the top.
  Word w;
  w.letters_.reserve(raw.size());
  for (auto& l : raw) push_letter(w.letters_, std::move(l));
  return w;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.letters().size() + v.letters().size());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce(std::move(raw));
}

Word invert(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (auto& l : raw) l.exponent = -l.exponent;
  return reduce(std::move(raw));
}

}  // namespace knotlog
