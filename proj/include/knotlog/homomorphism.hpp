#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotlog/group_ring.hpp"
#include "knotlog/laurent.hpp"
#include "knotlog/presentation.hpp"

namespace knotlog {

struct MonomialImage {
  std::size_t variable = 0;  // index into HomomorphismSpec::variables
  long exponent = 1;

  bool operator==(const MonomialImage&) const = default;
};

// Group homomorphism from a free group into the units x^e of a commutative
// Laurent ring. A generator mapped to std::nullopt goes to the constant 1.
//
// Evaluating a Fox matrix this way is only meaningful when the map factors
// through the presented group, i.e. every relator maps to 1. Abelianizing
// always does.
struct HomomorphismSpec {
  std::vector<std::string> variables;
  std::map<Symbol, std::optional<MonomialImage>> images;

  std::size_t nvars() const { return variables.empty() ? 1 : variables.size(); }
};

// "t=x^1, a=1, b=y^-2". Variables are indexed in order of first appearance.
HomomorphismSpec parse_homomorphism(std::string_view text);

// Generator g -> variable named g, for every generator.
HomomorphismSpec abelianization(const Presentation& p);

// Throws DomainError if a symbol in the support has no image.
MultiLaurent evaluate_hom(const RingElem& p, const HomomorphismSpec& h);
LaurentMatrix evaluate_hom(const RingMatrix& m, const HomomorphismSpec& h);

// Whether every relator of p maps to 1 under h; std::nullopt when some
// relator letter has no image.
std::optional<bool> respects_relators(const Presentation& p, const HomomorphismSpec& h);

}  // namespace knotlog
