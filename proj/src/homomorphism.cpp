#include "knotlog/homomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "knotlog/error.hpp"

namespace knotlog {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

HomomorphismSpec parse_homomorphism(std::string_view text) {
  HomomorphismSpec h;
  std::size_t offset = 0;
  auto column_of = [&](std::string_view part) {
    return static_cast<std::size_t>(part.data() - text.data()) + 1;
  };
  while (offset <= text.size()) {
    std::size_t comma = text.find(',', offset);
    std::string_view item = text.substr(offset, comma == std::string_view::npos ? std::string_view::npos : comma - offset);
    offset = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    item = trim(item);
    if (item.empty()) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw ParseError("empty homomorphism entry", 1, column_of(item));
    }
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected gen=image", 1, column_of(item));
    std::string gen(trim(item.substr(0, eq)));
    std::string_view image = trim(item.substr(eq + 1));
    if (!is_valid_symbol(gen)) throw ParseError("invalid generator name '" + gen + "'", 1, column_of(item));
    if (h.images.count(gen)) throw ParseError("generator '" + gen + "' mapped twice", 1, column_of(item));
    if (image == "1") {
      h.images[gen] = std::nullopt;
      continue;
    }
    std::size_t caret = image.find('^');
    std::string var(trim(image.substr(0, caret)));
    if (!is_valid_symbol(var)) throw ParseError("invalid image '" + std::string(image) + "'", 1, column_of(image));
    long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = trim(image.substr(caret + 1));
      if (!e.empty() && e.front() == '+') e.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
      if (ec != std::errc() || ptr != e.data() + e.size()) {
        throw ParseError("invalid exponent in '" + std::string(image) + "'", 1, column_of(e));
      }
    }
    auto it = std::find(h.variables.begin(), h.variables.end(), var);
    std::size_t index = static_cast<std::size_t>(it - h.variables.begin());
    if (it == h.variables.end()) h.variables.push_back(var);
    h.images[gen] = exponent == 0 ? std::nullopt : std::optional(MonomialImage{index, exponent});
  }
  return h;
}

HomomorphismSpec abelianization(const Presentation& p) {
  HomomorphismSpec h;
  h.variables = p.generators;
  for (std::size_t i = 0; i < p.generators.size(); ++i) h.images[p.generators[i]] = MonomialImage{i, 1};
  return h;
}

namespace {

Exponents word_image(const Word& w, const HomomorphismSpec& h) {
  Exponents e(h.nvars(), 0);
  for (const auto& letter : w.letters()) {
    auto it = h.images.find(letter.symbol);
    if (it == h.images.end()) {
      throw DomainError("homomorphism has no image for generator '" + letter.symbol + "'");
    }
    if (it->second) e[it->second->variable] += it->second->exponent * letter.exponent;
  }
  return e;
}

}  // namespace

MultiLaurent evaluate_hom(const RingElem& p, const HomomorphismSpec& h) {
  MultiLaurent r(h.nvars());
  for (const auto& [w, c] : p.terms()) r.add_term(word_image(w, h), c);
  return r;
}

LaurentMatrix evaluate_hom(const RingMatrix& m, const HomomorphismSpec& h) {
  LaurentMatrix r{m.rows(), m.cols(), {}};
  r.entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.entries.push_back(evaluate_hom(m.at(i, j), h));
  }
  return r;
}

std::optional<bool> respects_relators(const Presentation& p, const HomomorphismSpec& h) {
  Exponents zero(h.nvars(), 0);
  for (const auto& r : p.relators) {
    for (const auto& letter : r.letters()) {
      if (!h.images.count(letter.symbol)) return std::nullopt;
    }
  }
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return word_image(r, h) == zero; });
}

}  // namespace knotlog
