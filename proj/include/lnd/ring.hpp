#pragma once

#include "lnd/polynomial.hpp"
#include "lnd/term_order.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lnd {

class RingElement;
class RingPresentation;

using Ring = std::shared_ptr<const RingPresentation>;

/// B = Q[X1..Xn]/(f1..fm) with a cached reduced Groebner basis. Immutable.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    const ContextPtr& context() const noexcept { return context_; }
    const std::vector<std::string>& variables() const noexcept { return context_->names(); }
    std::size_t variable_count() const noexcept { return context_->size(); }
    const std::vector<Polynomial>& relations() const noexcept { return relations_; }
    const TermOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& groebner() const noexcept { return groebner_; }

    Polynomial reduce(const Polynomial& p) const;
    /// True when `m` is not divisible by any Groebner leading monomial.
    bool is_standard(const Monomial& m) const;
    const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }

    RingElement element(const Polynomial& p) const;
    RingElement constant(const Rational& c) const;
    RingElement variable(VarIndex v) const;
    /// Throws InvalidArgument for an unknown name.
    RingElement variable(const std::string& name) const;
    RingElement zero() const;
    RingElement one() const;

    std::string to_string(const Polynomial& p) const { return p.to_string(order_); }

private:
    friend Ring make_ring(ContextPtr, std::vector<Polynomial>, const TermOrder&);
    RingPresentation(ContextPtr context, std::vector<Polynomial> relations, TermOrder order);

    ContextPtr context_;
    std::vector<Polynomial> relations_;
    TermOrder order_;
    std::vector<Polynomial> groebner_;
    std::vector<Monomial> leading_;
};

/// Validates and builds a presentation. Throws ContextMismatch when a relation
/// lives outside `context`, InvalidArgument for a zero relation or an order
/// of the wrong arity, ZeroRing when the relations generate the unit ideal.
Ring make_ring(ContextPtr context, std::vector<Polynomial> relations, const TermOrder& order);
Ring make_ring(ContextPtr context, std::vector<Polynomial> relations, OrderKind kind = OrderKind::grevlex);

/// Same relations with one more variable appended (least significant in the order).
Ring adjoin_variable(const Ring& ring, const std::string& name);

/// Element of B, always stored as its normal form.
class RingElement {
public:
    RingElement(Ring ring, Polynomial normal_form_repr);

    const Ring& ring() const noexcept { return ring_; }
    const Polynomial& repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_.is_zero(); }
    bool is_constant() const noexcept { return repr_.is_constant(); }
    int degree() const noexcept { return repr_.degree(); }

    RingElement pow(long long exponent) const;
    /// Scaled to leading coefficient 1 under the ring's order.
    RingElement monic() const;
    /// Image under B -> B[new variables] for a ring built by adjoin_variable.
    RingElement embed(const Ring& wider) const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement& operator*=(const Rational& scalar);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
    friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
    friend bool operator==(const RingElement& a, const RingElement& b);

    std::string to_string() const { return repr_.to_string(ring_->order()); }

private:
    void check_ring(const RingElement& other) const;

    Ring ring_;
    Polynomial repr_;
};

bool same_ring(const Ring& a, const Ring& b);

/// Total order on elements of one ring (leading terms first), used for canonical sorting.
bool element_less(const RingElement& a, const RingElement& b);

/// n / t^k in the localization B_t. Equality is by cross-multiplication,
/// valid when t is not a zero-divisor; fractions are never cancelled.
class LocalizedElement {
public:
    /// Throws InvalidArgument when t is zero.
    LocalizedElement(RingElement numerator, RingElement t, unsigned exponent = 0);
    /// Embedding b -> b / t^0.
    static LocalizedElement embed(const RingElement& b, const RingElement& t);

    const Ring& ring() const noexcept { return numerator_.ring(); }
    const RingElement& numerator() const noexcept { return numerator_; }
    const RingElement& denominator_base() const noexcept { return t_; }
    unsigned exponent() const noexcept { return exponent_; }

    /// The element of B this represents when the denominator is a power of 1 or absent.
    std::optional<RingElement> as_ring_element() const;

    LocalizedElement operator-() const;
    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    /// Cross-multiplication: n1 t^k2 == n2 t^k1.
    friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);

    std::string to_string() const;

private:
    void check_compatible(const LocalizedElement& other) const;

    RingElement numerator_;
    RingElement t_;
    unsigned exponent_;
};

}  // namespace lnd
