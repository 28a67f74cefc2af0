#pragma once

#include "lnd/monomial.hpp"
#include "lnd/rational.hpp"
#include "lnd/term_order.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lnd {

/// Ordered list of distinct variable names shared by a family of polynomials.
class VariableContext {
public:
    /// Throws DuplicateVariable.
    static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(VarIndex v) const { return names_.at(v); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<VarIndex> index_of(const std::string& name) const;

    /// True when every name of *this is the same-position name of `other`.
    bool is_prefix_of(const VariableContext& other) const;

private:
    explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Sparse multivariate polynomial over Q. Canonical: no zero coefficient is
/// ever stored, so equality is equality of term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(ContextPtr context);
    Polynomial(ContextPtr context, const Rational& constant);
    Polynomial(ContextPtr context, const Monomial& m, const Rational& coefficient = 1);

    static Polynomial variable(ContextPtr context, VarIndex v);

    const ContextPtr& context() const noexcept { return context_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the monomial 1.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;

    /// Leading monomial / coefficient under `order`; the polynomial must be nonzero.
    const Monomial& leading_monomial(const TermOrder& order) const;
    const Rational& leading_coefficient(const TermOrder& order) const;
    /// Scaled so the leading coefficient is 1; zero stays zero.
    Polynomial monic(const TermOrder& order) const;

    /// In-place accumulate: *this += coefficient * m.
    void add_term(const Monomial& m, const Rational& coefficient);
    /// In-place accumulate: *this += coefficient * m * p.
    void add_scaled(const Rational& coefficient, const Monomial& m, const Polynomial& p);

    Polynomial derivative(VarIndex v) const;
    /// Throws InvalidArgument on a negative exponent.
    Polynomial pow(long long exponent) const;
    /// Reinterpret in a context whose leading names coincide with ours.
    Polynomial embed(const ContextPtr& wider) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text: terms descending in `order`, `*` between factors, `^` for powers.
    std::string to_string(const TermOrder& order) const;

private:
    void check_context(const Polynomial& other) const;

    ContextPtr context_;
    TermMap terms_;
};

/// Three-way comparison of polynomials: leading terms first, then coefficients.
std::strong_ordering compare(const Polynomial& a, const Polynomial& b, const TermOrder& order);

std::string monomial_to_string(const Monomial& m, const VariableContext& context);

}  // namespace lnd
