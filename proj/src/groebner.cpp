#include "lnd/groebner.hpp"

#include "lnd/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lnd {

namespace {

struct LeadingData {
    Monomial monomial;
    Rational coefficient;
};

std::vector<LeadingData> leading_data(std::span<const Polynomial> basis, const TermOrder& order) {
    std::vector<LeadingData> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back({g.leading_monomial(order), g.leading_coefficient(order)});
    return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const std::vector<LeadingData>& leads,
                  const TermOrder& order) {
    // Working copy ordered so begin() is always the current leading term.
    std::map<Monomial, Rational, DescendingBy> work(DescendingBy{&order});
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    Polynomial remainder(f.context());
    while (!work.empty()) {
        auto head = work.begin();
        const Monomial m = head->first;
        const Rational c = head->second;
        std::size_t i = 0;
        while (i < basis.size() && !leads[i].monomial.divides(m)) ++i;
        if (i == basis.size()) {
            remainder.add_term(m, c);
            work.erase(head);
            continue;
        }
        const Monomial shift = m / leads[i].monomial;
        const Rational scale = c / leads[i].coefficient;
        for (const auto& [gm, gc] : basis[i].terms()) {
            Monomial target = shift * gm;
            Rational delta = scale * gc;
            auto [it, inserted] = work.try_emplace(std::move(target), -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return remainder;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& order) {
    if (basis.empty() || f.is_zero()) return f;
    return reduce(f, basis, leading_data(basis, order), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    const Monomial l = lcm(lf, lg);
    Polynomial out(f.context());
    out.add_scaled(1 / f.leading_coefficient(order), l / lf, f);
    out.add_scaled(-1 / g.leading_coefficient(order), l / lg, g);
    return out;
}

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
        }
    }
    return true;
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> relations, const TermOrder& order) {
    std::vector<Polynomial> basis;
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        if (r.is_constant()) return {Polynomial(r.context(), Rational(1))};
        basis.push_back(r.monic(order));
    }
    if (basis.empty()) return {};

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::vector<LeadingData> leads = leading_data(basis, order);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // Product criterion: coprime leading monomials give a zero S-remainder.
        if (leads[i].monomial.coprime(leads[j].monomial)) continue;
        Polynomial h = reduce(s_polynomial(basis[i], basis[j], order), basis, leads, order);
        if (h.is_zero()) continue;
        if (h.is_constant()) return {Polynomial(h.context(), Rational(1))};
        h = h.monic(order);
        const std::size_t k = basis.size();
        basis.push_back(std::move(h));
        leads.push_back({basis.back().leading_monomial(order), Rational(1)});
        for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = leads[i].monomial;
            const auto& lj = leads[j].monomial;
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce each element by the others.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        const Monomial lead = minimal[i].leading_monomial(order);
        Polynomial tail = minimal[i];
        tail.add_term(lead, -minimal[i].leading_coefficient(order));
        Polynomial g = normal_form(tail, others, order);
        g.add_term(lead, Rational(1));
        reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(order), b.leading_monomial(order)) > 0;
    });
    return reduced;
}

}  // namespace lnd
