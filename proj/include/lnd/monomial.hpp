#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace lnd {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Power product of variables, stored sparsely as (variable, exponent) pairs
/// sorted by variable index. No stored exponent is zero.
class Monomial {
public:
    using Factor = std::pair<VarIndex, Exponent>;

    Monomial() = default;
    /// Sorts, merges repeated variables and drops zero exponents.
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(VarIndex v, Exponent e = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    Exponent exponent(VarIndex v) const noexcept;
    unsigned total_degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return factors_.empty(); }

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; `divisor` must divide *this.
    Monomial operator/(const Monomial& divisor) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);

    // Storage order only (lexicographic on the factor list); term orders live in TermOrder.
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.factors_ == b.factors_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) noexcept { return a.factors_ <=> b.factors_; }

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

}  // namespace lnd
