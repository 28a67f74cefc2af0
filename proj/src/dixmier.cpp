#include "lnd/dixmier.hpp"

#include <algorithm>

namespace lnd {

namespace {

bool contains(const std::vector<RingElement>& v, const RingElement& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

void require_certified(const Derivation& d, unsigned max_steps) {
    if (!certify_lnd(d, max_steps).certified) {
        throw UncertifiedDerivation("derivation " + d.label() + " is not certified locally nilpotent within " +
                                    std::to_string(max_steps) + " steps");
    }
}

}  // namespace

SliceReport find_slices(const Derivation& d, std::span<const RingElement> extra_candidates) {
    const Ring& ring = d.ring();
    const std::size_t n = ring->variable_count();
    SliceReport report{d, {}, {}, {}};

    std::vector<RingElement> candidates;
    for (VarIndex v = 0; v < n; ++v) candidates.push_back(ring->variable(v));
    for (const auto& c : extra_candidates) candidates.push_back(c);

    // Coefficient vectors in {-1,0,1}^n, enumerated in base 3.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    for (std::size_t code = 1; code < combos; ++code) {
        RingElement r = ring->zero();
        std::size_t rest = code;
        unsigned nonzero = 0;
        for (VarIndex v = 0; v < n; ++v, rest /= 3) {
            const int digit = static_cast<int>(rest % 3);
            if (digit == 0) continue;
            ++nonzero;
            r += ring->variable(v) * Rational(digit == 1 ? 1 : -1);
        }
        if (nonzero >= 2) candidates.push_back(std::move(r));
    }

    std::vector<RingElement> local_seen;
    for (const auto& r : candidates) {
        RingElement t = d.apply(r);
        if (t.is_zero()) continue;
        if (t.is_constant()) {
            RingElement s = r * Rational(1 / t.repr().constant_term());
            if (!contains(report.slices, s)) report.slices.push_back(std::move(s));
        } else if (d.apply(t).is_zero() && !contains(local_seen, r)) {
            local_seen.push_back(r);
            report.local_slices.push_back({r, std::move(t)});
        }
    }
    report.search_space = "ring variables, " + std::to_string(extra_candidates.size()) +
                          " extra candidates, linear forms in " + std::to_string(n) +
                          " variables with coefficients in {-1,0,1}";
    return report;
}

LocalizedElement dixmier_apply(const Derivation& d, const RingElement& r, const RingElement& f, unsigned max_steps) {
    const RingElement t = d.apply(r);
    if (t.is_zero() || !d.apply(t).is_zero()) {
        throw NotLocalSlice(r.to_string() + " is not a local slice of " + d.label());
    }
    require_certified(d, max_steps);

    // Iterates D^i(f) until they vanish.
    std::vector<RingElement> iterates{f};
    while (!iterates.back().is_zero()) {
        if (iterates.size() > max_steps) {
            throw UncertifiedDerivation("D^i(f) did not vanish within " + std::to_string(max_steps) + " steps");
        }
        iterates.push_back(d.apply(iterates.back()));
    }
    iterates.pop_back();
    if (iterates.empty()) return LocalizedElement(f.ring()->zero(), t, 0);

    const unsigned top = static_cast<unsigned>(iterates.size() - 1);
    RingElement numerator = f.ring()->zero();
    Rational factorial = 1;
    for (unsigned i = 0; i <= top; ++i) {
        if (i > 0) factorial *= i;
        const Rational coeff = Rational(i % 2 == 0 ? 1 : -1) / factorial;
        numerator += coeff * (iterates[i] * r.pow(i) * t.pow(top - i));
    }
    return LocalizedElement(std::move(numerator), t, top);
}

RingElement dixmier_apply_slice(const Derivation& d, const RingElement& s, const RingElement& f, unsigned max_steps) {
    if (!(d.apply(s) == s.ring()->one())) throw NotASlice(s.to_string() + " is not a slice of " + d.label());
    auto value = dixmier_apply(d, s, f, max_steps).as_ring_element();
    return *value;
}

KernelPresentation kernel_via_slice(const Derivation& d, const RingElement& s, unsigned max_steps) {
    if (!(d.apply(s) == s.ring()->one())) throw NotASlice(s.to_string() + " is not a slice of " + d.label());
    const Ring& ring = d.ring();
    std::vector<RingElement> images;
    for (VarIndex v = 0; v < ring->variable_count(); ++v) {
        images.push_back(dixmier_apply_slice(d, s, ring->variable(v), max_steps));
    }
    return {d, normalize_generators(std::move(images)), "slice_theorem(" + s.to_string() + ")"};
}

std::vector<RingElement> normalize_generators(std::vector<RingElement> generators) {
    std::vector<RingElement> out;
    for (auto& g : generators) {
        if (g.is_constant()) continue;
        out.push_back(g.monic());
    }
    std::sort(out.begin(), out.end(), element_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lnd
