#pragma once

#include "lnd/monomial.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lnd {

enum class OrderKind { lex, grevlex };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& text);

/// Monomial order over a fixed number of variables. `priority[k]` is the
/// variable ranked k-th most significant.
class TermOrder {
public:
    TermOrder(OrderKind kind, std::vector<VarIndex> priority);

    /// Declared variable order, first variable most significant.
    static TermOrder natural(OrderKind kind, std::size_t variable_count);

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<VarIndex>& priority() const noexcept { return priority_; }
    std::size_t variable_count() const noexcept { return priority_.size(); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Same order with one extra variable appended as least significant.
    TermOrder extended() const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    OrderKind kind_;
    std::vector<VarIndex> priority_;
};

/// Comparator adapter, descending by default so map::begin() is the leading term.
struct DescendingBy {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace lnd
