#include "lnd/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace lnd {

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v) {
            factors_.back().second += e;
        } else {
            factors_.emplace_back(v, e);
        }
        degree_ += e;
    }
}

Monomial Monomial::variable(VarIndex v, Exponent e) {
    return Monomial({{v, e}});
}

Exponent Monomial::exponent(VarIndex v) const noexcept {
    for (const auto& [var, e] : factors_) {
        if (var == v) return e;
        if (var > v) break;
    }
    return 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    auto it = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (it != other.factors_.end() && it->first < v) ++it;
        if (it == other.factors_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) return false;
        if (a->first < b->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    assert(divisor.divides(*this));
    Monomial out;
    out.factors_.reserve(factors_.size());
    auto d = divisor.factors_.begin();
    for (const auto& [v, e] : factors_) {
        Exponent remaining = e;
        if (d != divisor.factors_.end() && d->first == v) {
            remaining -= d->second;
            ++d;
        }
        if (remaining != 0) out.factors_.emplace_back(v, remaining);
    }
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->first < y->first)) {
            out.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->first < x->first) {
            out.factors_.push_back(*y++);
        } else {
            out.factors_.emplace_back(x->first, std::max(x->second, y->second));
            ++x;
            ++y;
        }
    }
    for (const auto& f : out.factors_) out.degree_ += f.second;
    return out;
}

}  // namespace lnd
