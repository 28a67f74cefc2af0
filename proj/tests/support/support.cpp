#include "support.hpp"

#include <algorithm>

#ifndef LND_CORPUS_DIR
#error "LND_CORPUS_DIR must be defined"
#endif

namespace lnd::testing {

FixtureInstance corpus_fixture(const std::string& stem, std::optional<OrderKind> order) {
    return instantiate(load_fixture(std::string(LND_CORPUS_DIR) + "/" + stem + ".toml"), order);
}

RingElement el(const Ring& ring, std::string_view text) { return parse_element(text, ring); }

std::vector<RingElement> els(const Ring& ring, std::initializer_list<std::string_view> texts) {
    std::vector<RingElement> out;
    for (auto t : texts) out.push_back(el(ring, t));
    return out;
}

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    int n = 0;
    while (n == 0) n = num(rng);
    Rational q(n, den(rng));
    q.canonicalize();
    return q;
}

Monomial random_monomial(std::size_t variables, int max_degree, Rng& rng) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, variables - 1);
    std::vector<std::pair<VarIndex, Exponent>> factors;
    for (int k = deg(rng); k > 0; --k) factors.emplace_back(static_cast<VarIndex>(var(rng)), 1);
    return Monomial(std::move(factors));
}

Polynomial random_polynomial(const ContextPtr& context, int max_degree, int max_terms, Rng& rng) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    Polynomial p(context);
    for (int k = terms(rng); k > 0; --k) p.add_term(random_monomial(context->size(), max_degree, rng), random_rational(rng));
    return p;
}

RingElement random_element(const Ring& ring, int max_degree, int max_terms, Rng& rng) {
    return ring->element(random_polynomial(ring->context(), max_degree, max_terms, rng));
}

RingElement random_nonzero_element(const Ring& ring, int max_degree, int max_terms, Rng& rng) {
    for (;;) {
        RingElement e = random_element(ring, max_degree, max_terms, rng);
        if (!e.is_zero()) return e;
    }
}

std::vector<std::string> rendered(const std::vector<RingElement>& elements) {
    std::vector<std::string> out;
    for (const auto& e : elements) out.push_back(e.to_string());
    return out;
}

}  // namespace lnd::testing
