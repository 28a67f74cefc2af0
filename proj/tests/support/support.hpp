#pragma once

#include "lnd/dixmier.hpp"
#include "lnd/fixture.hpp"
#include "lnd/invariant_lab.hpp"
#include "lnd/parser.hpp"

#include <random>
#include <string>
#include <string_view>

namespace lnd::testing {

using Rng = std::mt19937_64;

/// Fixture from the bundled corpus, by file stem ("quadric_t", ...).
FixtureInstance corpus_fixture(const std::string& stem, std::optional<OrderKind> order = std::nullopt);

RingElement el(const Ring& ring, std::string_view text);
std::vector<RingElement> els(const Ring& ring, std::initializer_list<std::string_view> texts);

/// Nonzero rational with small numerator and denominator.
Rational random_rational(Rng& rng);
Monomial random_monomial(std::size_t variables, int max_degree, Rng& rng);
/// Up to `max_terms` terms of total degree <= `max_degree`; may be zero.
Polynomial random_polynomial(const ContextPtr& context, int max_degree, int max_terms, Rng& rng);
RingElement random_element(const Ring& ring, int max_degree, int max_terms, Rng& rng);
RingElement random_nonzero_element(const Ring& ring, int max_degree, int max_terms, Rng& rng);

/// Generator sets of a normalized kernel presentation, rendered for comparison.
std::vector<std::string> rendered(const std::vector<RingElement>& elements);

}  // namespace lnd::testing
