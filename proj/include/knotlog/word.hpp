#pragma once

#include <compare>
#include <string>
#include <vector>

namespace knotlog {

using Symbol = std::string;

bool is_valid_symbol(const std::string& name);

struct Letter {
  Symbol symbol;
  long exponent = 1;

  auto operator<=>(const Letter&) const = default;
};

// Reduced word in a free group, stored in run-length form. Adjacent letters
// always carry distinct symbols and no exponent is zero; the empty word is the
// identity.
class Word {
 public:
  Word() = default;

  static Word generator(Symbol symbol, long exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Sum of |exponent| over letters.
  long length() const;

  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

  friend Word reduce(std::vector<Letter> raw);

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::vector<Letter> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

}  // namespace knotlog
