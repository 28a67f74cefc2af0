#include "lnd/term_order.hpp"

#include "lnd/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lnd {

std::string to_string(OrderKind kind) {
    return kind == OrderKind::lex ? "lex" : "grevlex";
}

OrderKind parse_order_kind(const std::string& text) {
    if (text == "lex") return OrderKind::lex;
    if (text == "grevlex") return OrderKind::grevlex;
    throw InvalidArgument("unknown term order '" + text + "' (expected lex or grevlex)");
}

TermOrder::TermOrder(OrderKind kind, std::vector<VarIndex> priority) : kind_(kind), priority_(std::move(priority)) {
    std::vector<VarIndex> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) throw InvalidArgument("variable priority is not a permutation");
    }
}

TermOrder TermOrder::natural(OrderKind kind, std::size_t variable_count) {
    std::vector<VarIndex> priority(variable_count);
    std::iota(priority.begin(), priority.end(), VarIndex{0});
    return TermOrder(kind, std::move(priority));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return std::strong_ordering::equal;
    if (kind_ == OrderKind::lex) {
        for (VarIndex v : priority_) {
            auto c = a.exponent(v) <=> b.exponent(v);
            if (c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        auto c = b.exponent(*it) <=> a.exponent(*it);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

TermOrder TermOrder::extended() const {
    std::vector<VarIndex> priority = priority_;
    priority.push_back(static_cast<VarIndex>(priority_.size()));
    return TermOrder(kind_, std::move(priority));
}

}  // namespace lnd
