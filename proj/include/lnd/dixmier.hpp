#pragma once

#include "lnd/derivation.hpp"
#include "lnd/ring.hpp"

#include <span>
#include <string>
#include <vector>

namespace lnd {

struct LocalSlice {
    RingElement r;
    RingElement t;  // D(r): nonzero and in Ker D
};

struct SliceReport {
    Derivation derivation;
    std::vector<RingElement> slices;        // D(s) = 1
    std::vector<LocalSlice> local_slices;   // D(r) = t, t != 0, D(t) = 0, t non-constant
    std::string search_space;
};

/// Bounded template scan: ring variables, then `extra_candidates`, then every
/// sum of variables with coefficients in {-1, 0, 1}. A candidate r with D(r)
/// a nonzero constant c yields the slice r/c. Finding nothing proves nothing.
SliceReport find_slices(const Derivation& d, std::span<const RingElement> extra_candidates = {});

/// Dixmier map pi_r(f) = sum_i (-1)^i / i! * D^i(f) * r^i / t^i in B_t,
/// t = D(r), over a common denominator t^(n-1) with n the index of f.
/// Throws NotLocalSlice, or UncertifiedDerivation when D is not certified
/// nilpotent on the generators within `max_steps`.
LocalizedElement dixmier_apply(const Derivation& d, const RingElement& r, const RingElement& f,
                               unsigned max_steps = kDefaultMaxSteps);

/// pi_s(f) for a slice s, as an element of B. Throws NotASlice.
RingElement dixmier_apply_slice(const Derivation& d, const RingElement& s, const RingElement& f,
                                unsigned max_steps = kDefaultMaxSteps);

struct KernelPresentation {
    Derivation derivation;
    std::vector<RingElement> generators;
    std::string via;
};

/// Ker D = Q[pi_s(X1), ..., pi_s(Xn)] for a slice s.
KernelPresentation kernel_via_slice(const Derivation& d, const RingElement& s, unsigned max_steps = kDefaultMaxSteps);

/// Monic under the ring order, constants and zeros dropped, sorted ascending, deduplicated.
std::vector<RingElement> normalize_generators(std::vector<RingElement> generators);

}  // namespace lnd
