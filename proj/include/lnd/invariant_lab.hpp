#pragma once

#include "lnd/derivation.hpp"
#include "lnd/kernels.hpp"
#include "lnd/linalg.hpp"
#include "lnd/ring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lnd {

struct LabOptions {
    std::size_t max_frame = 20000;  // monomial-count cap for any frame
    kernels::Execution execution = kernels::Execution::parallel;
    unsigned max_steps = kDefaultMaxSteps;
};

/// Degree-<=d snapshot of a subspace of B. "Degree" is the total degree of
/// the normal form under the ring's order. Rows are in reduced echelon form
/// over the frame, which lists the standard monomials of degree <= d in
/// descending order (so each row's pivot is its leading monomial).
class SpanBasis {
public:
    SpanBasis(Ring ring, unsigned degree_bound, std::vector<Monomial> frame, Echelon basis, std::string provenance);

    const Ring& ring() const noexcept { return ring_; }
    unsigned degree_bound() const noexcept { return degree_bound_; }
    const std::vector<Monomial>& frame() const noexcept { return frame_; }
    const Echelon& basis() const noexcept { return basis_; }
    const std::string& provenance() const noexcept { return provenance_; }
    std::size_t dimension() const noexcept { return basis_.pivots.size(); }

    RingElement element(std::size_t row) const;
    std::vector<RingElement> elements() const;
    /// Coordinates of f over the frame. Throws DegreeOverflow when deg f > bound.
    std::vector<Rational> coordinates(const RingElement& f) const;

    /// Human-readable basis listing, one element per row.
    std::string describe() const;

private:
    Ring ring_;
    unsigned degree_bound_;
    std::vector<Monomial> frame_;
    std::map<Monomial, std::size_t> column_;
    Echelon basis_;
    std::string provenance_;
};

/// Standard monomials of degree <= d, descending. Throws ResourceBound past `cap`.
std::vector<Monomial> standard_monomials(const Ring& ring, unsigned d, std::size_t cap);

/// {f : deg f <= d, D(f) = 0} as the nullspace of f -> nf(D(f)).
SpanBasis kernel_basis_bounded(const Derivation& d, unsigned degree, const LabOptions& options = {});

/// Span of the normal forms of power products of `gens` with at most `degree`
/// factors whose normal form has degree <= `degree`. Always contains 1.
SpanBasis subalgebra_span_bounded(const Ring& ring, std::span<const RingElement> gens, unsigned degree,
                                  const LabOptions& options = {});

/// span{1} at the given bound.
SpanBasis constants_span(const Ring& ring, unsigned degree, const LabOptions& options = {});

/// Exact intersection of row spaces: the common nullspace of the operands' annihilators.
SpanBasis intersect_spans(std::span<const SpanBasis> bases);

struct SliceWitness {
    Derivation derivation;
    RingElement slice;
};

/// Intersection of the bounded kernels of a family of derivations with
/// verified slices. span{1} is the degree-d certificate that the family
/// alone forces ML* = k. Throws InvalidArgument for an empty family,
/// SliceVerificationFailed when some D(s) != 1.
SpanBasis ml_star_estimate_bounded(std::span<const SliceWitness> family, unsigned degree,
                                   const LabOptions& options = {});

struct KernelDistinctness {
    bool distinct = false;
    std::optional<RingElement> witness;
    /// 1: witness in Ker D1 only, 2: in Ker D2 only.
    int witness_side = 0;
};

/// Refutes Ker D1 == Ker D2 in degree <= d; never proves equality.
KernelDistinctness kernels_distinct_bounded(const Derivation& d1, const Derivation& d2, unsigned degree,
                                            const LabOptions& options = {});

bool membership_in_span(const RingElement& f, const SpanBasis& span);
bool span_contains(const SpanBasis& outer, const SpanBasis& inner);
bool same_span(const SpanBasis& a, const SpanBasis& b);
/// A basis element of `a` not in `b`, low degree first.
std::optional<RingElement> element_outside(const SpanBasis& a, const SpanBasis& b);

}  // namespace lnd
