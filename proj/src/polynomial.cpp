#include "lnd/polynomial.hpp"

#include "lnd/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lnd {

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) throw DuplicateVariable(n);
    }
    return std::shared_ptr<const VariableContext>(new VariableContext(std::move(names)));
}

std::optional<VarIndex> VariableContext::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<VarIndex>(it - names_.begin());
}

bool VariableContext::is_prefix_of(const VariableContext& other) const {
    if (names_.size() > other.names_.size()) return false;
    return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->names() == b->names());
}

Polynomial::Polynomial(ContextPtr context) : context_(std::move(context)) {}

Polynomial::Polynomial(ContextPtr context, const Rational& constant) : context_(std::move(context)) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(ContextPtr context, const Monomial& m, const Rational& coefficient)
    : context_(std::move(context)) {
    if (coefficient != 0) terms_.emplace(m, coefficient);
}

Polynomial Polynomial::variable(ContextPtr context, VarIndex v) {
    if (v >= context->size()) throw InvalidArgument("variable index out of range");
    return Polynomial(std::move(context), Monomial::variable(v));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial{});
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

namespace {

Polynomial::TermMap::const_iterator leading(const Polynomial::TermMap& terms, const TermOrder& order) {
    if (terms.empty()) throw InvalidArgument("leading term of the zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(best); it != terms.end(); ++it) {
        if (order.compare(it->first, best->first) > 0) best = it;
    }
    return best;
}

}  // namespace

const Monomial& Polynomial::leading_monomial(const TermOrder& order) const {
    return leading(terms_, order)->first;
}

const Rational& Polynomial::leading_coefficient(const TermOrder& order) const {
    return leading(terms_, order)->second;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coefficient(order);
    return *this * inv;
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Rational& coefficient, const Monomial& m, const Polynomial& p) {
    check_context(p);
    if (coefficient == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(m * pm, coefficient * pc);
}

Polynomial Polynomial::derivative(VarIndex v) const {
    Polynomial out(context_);
    const Monomial dv = Monomial::variable(v);
    for (const auto& [m, c] : terms_) {
        Exponent e = m.exponent(v);
        if (e == 0) continue;
        out.add_term(m / dv, c * e);
    }
    return out;
}

Polynomial Polynomial::pow(long long exponent) const {
    if (exponent < 0) throw InvalidArgument("negative power " + std::to_string(exponent));
    Polynomial result(context_, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::embed(const ContextPtr& wider) const {
    if (!context_->is_prefix_of(*wider)) throw ContextMismatch();
    Polynomial out(wider);
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_context(b);
    Polynomial out(a.context_);
    for (const auto& [m, c] : a.terms_) out.add_scaled(c, m, b);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_context(a.context_, b.context_) && a.terms_ == b.terms_;
}

void Polynomial::check_context(const Polynomial& other) const {
    if (!same_context(context_, other.context_)) throw ContextMismatch();
}

std::string monomial_to_string(const Monomial& m, const VariableContext& context) {
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += context.name(v);
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string Polynomial::to_string(const TermOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return order.compare(a->first, b->first) > 0; });

    std::ostringstream os;
    bool first = true;
    for (const auto* term : sorted) {
        const auto& [m, c] = *term;
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational magnitude = abs(c);
        if (m.is_one()) {
            os << magnitude.get_str();
        } else {
            if (magnitude != 1) os << magnitude.get_str() << '*';
            os << monomial_to_string(m, *context_);
        }
    }
    return os.str();
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b, const TermOrder& order) {
    auto sorted = [&](const Polynomial& p) {
        std::vector<const Polynomial::TermMap::value_type*> v;
        for (const auto& t : p.terms()) v.push_back(&t);
        std::sort(v.begin(), v.end(), [&](auto* x, auto* y) { return order.compare(x->first, y->first) > 0; });
        return v;
    };
    auto ta = sorted(a);
    auto tb = sorted(b);
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        if (auto c = order.compare(ta[i]->first, tb[i]->first); c != 0) return c;
        if (ta[i]->second != tb[i]->second) {
            return ta[i]->second < tb[i]->second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return ta.size() <=> tb.size();
}

}  // namespace lnd
