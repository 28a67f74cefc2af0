#pragma once

#include "lnd/polynomial.hpp"
#include "lnd/term_order.hpp"

#include <span>
#include <vector>

namespace lnd {

/// Reduced Groebner basis of the ideal generated by `relations`: monic,
/// interreduced, sorted by leading monomial descending. Zero inputs are
/// ignored; the zero ideal yields an empty basis.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> relations, const TermOrder& order);

/// Fully reduced remainder of `f` on division by `basis`. No term of the
/// result is divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order);

}  // namespace lnd
