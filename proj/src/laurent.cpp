#include "knotlog/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "knotlog/error.hpp"

namespace knotlog {

MultiLaurent::MultiLaurent(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw DomainError("a Laurent polynomial needs at least one variable");
}

MultiLaurent MultiLaurent::constant(std::size_t nvars, const Rational& c) {
  MultiLaurent p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiLaurent MultiLaurent::monomial(const Exponents& exponents, const Rational& c) {
  MultiLaurent p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

MultiLaurent MultiLaurent::variable(std::size_t nvars, std::size_t index, long exponent) {
  Exponents e(nvars, 0);
  e.at(index) = exponent;
  return monomial(e);
}

Rational MultiLaurent::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiLaurent::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("exponent vector has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string MultiLaurent::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return names.empty() ? "x" + std::to_string(i + 1) : names.at(i);
  };
  std::string out;
  for (const auto& [e, coeff] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += name(i);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    bool negative = coeff < 0;
    Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += rational_display(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += rational_display(magnitude) + "*" + mono;
    }
  }
  return out;
}

namespace {

void require_same_vars(const MultiLaurent& p, const MultiLaurent& q) {
  if (p.nvars() != q.nvars()) throw DomainError("Laurent polynomials over different variable counts");
}

}  // namespace

MultiLaurent add(const MultiLaurent& p, const MultiLaurent& q) {
  require_same_vars(p, q);
  MultiLaurent r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

MultiLaurent sub(const MultiLaurent& p, const MultiLaurent& q) {
  require_same_vars(p, q);
  MultiLaurent r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

MultiLaurent mul(const MultiLaurent& p, const MultiLaurent& q) {
  require_same_vars(p, q);
  MultiLaurent r(p.nvars());
  Exponents e(p.nvars());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

MultiLaurent scale(const Rational& c, const MultiLaurent& p) {
  MultiLaurent r(p.nvars());
  for (const auto& [e, a] : p.terms()) r.add_term(e, c * a);
  return r;
}

MultiLaurent pow(const MultiLaurent& p, long exponent) {
  if (exponent < 0) {
    if (p.terms().size() != 1) {
      throw DomainError("negative power of a Laurent polynomial that is not a monomial");
    }
    const auto& [e, c] = *p.terms().begin();
    Exponents inv = e;
    for (auto& x : inv) x = -x;
    return pow(MultiLaurent::monomial(inv, 1 / c), -exponent);
  }
  MultiLaurent result = MultiLaurent::constant(p.nvars(), 1);
  MultiLaurent base = p;
  for (unsigned long k = static_cast<unsigned long>(exponent); k; k >>= 1) {
    if (k & 1) result = mul(result, base);
    if (k > 1) base = mul(base, base);
  }
  return result;
}

std::complex<double> evaluate(const MultiLaurent& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) throw DomainError("evaluation point has the wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= std::pow(point[i], static_cast<double>(e[i]));
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const LaurentMatrix& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out += ", ";
      out += m.at(i, j).to_string(names);
    }
    out += ']';
  }
  return m.rows == 1 ? out : "[" + out + "]";
}

namespace {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' signed-int)?
//   atom   := integer | identifier | '(' expr ')'
class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  ParsedLaurent parse() {
    collect_variables();
    if (variables_.empty()) variables_.push_back("x");
    pos_ = 0;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    MultiLaurent p = parse_expr();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return {std::move(p), variables_};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " in polynomial", 1, pos_ + 1);
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string read_identifier() {
    std::size_t begin = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  void collect_variables() {
    while (!at_end()) {
      if (ident_start(peek())) {
        std::string name = read_identifier();
        if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) {
          variables_.push_back(name);
        }
      } else {
        ++pos_;
      }
    }
  }

  std::size_t nvars() const { return variables_.size(); }

  MultiLaurent parse_expr() {
    skip_ws();
    MultiLaurent acc(nvars());
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    MultiLaurent first = parse_term();
    acc = negative ? scale(-1, first) : first;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      bool minus = peek() == '-';
      ++pos_;
      MultiLaurent t = parse_term();
      acc = minus ? sub(acc, t) : add(acc, t);
    }
    return acc;
  }

  MultiLaurent parse_term() {
    MultiLaurent acc = parse_power();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = mul(acc, parse_power());
    }
    return acc;
  }

  long parse_signed_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    std::size_t begin = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) fail("expected an integer exponent");
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc() || value > 100000) fail("exponent out of range");
    return negative ? -value : value;
  }

  MultiLaurent parse_power() {
    MultiLaurent base = parse_atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    std::size_t at = pos_;
    long e = parse_signed_int();
    try {
      return pow(base, e);
    } catch (const DomainError& err) {
      throw ParseError(err.what(), 1, at + 1);
    }
  }

  MultiLaurent parse_atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      MultiLaurent inner = parse_expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t begin = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      BigInt value(std::string(text_.substr(begin, pos_ - begin)));
      return MultiLaurent::constant(nvars(), Rational(value));
    }
    if (ident_start(peek())) {
      std::string name = read_identifier();
      auto idx = static_cast<std::size_t>(
          std::find(variables_.begin(), variables_.end(), name) - variables_.begin());
      return MultiLaurent::variable(nvars(), idx);
    }
    fail(at_end() ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> variables_;
};

}  // namespace

ParsedLaurent parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace knotlog
