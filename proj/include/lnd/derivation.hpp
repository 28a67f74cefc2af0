#pragma once

#include "lnd/errors.hpp"
#include "lnd/ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lnd {

inline constexpr unsigned kDefaultMaxSteps = 64;

/// The Leibniz expansion of a relation does not lie in the ideal.
class NotWellDefined : public Error {
public:
    NotWellDefined(Polynomial relation, Polynomial residue, const std::string& rendered)
        : Error(rendered), relation_(std::move(relation)), residue_(std::move(residue)) {}
    const Polynomial& relation() const noexcept { return relation_; }
    /// Nonzero normal form of D(relation).
    const Polynomial& residue() const noexcept { return residue_; }

private:
    Polynomial relation_;
    Polynomial residue_;
};

/// Q-derivation of B given by the images of the generators.
class Derivation {
public:
    /// One image per ring variable, in variable order. Throws NotWellDefined
    /// when some relation f has D(f) outside the ideal.
    Derivation(Ring ring, std::vector<RingElement> images, std::string label = "D");

    /// Zero on every generator.
    static Derivation zero(const Ring& ring, std::string label = "0");

    const Ring& ring() const noexcept { return ring_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<RingElement>& images() const noexcept { return images_; }
    const RingElement& image(VarIndex v) const { return images_.at(v); }
    /// Largest total degree among the generator images (0 if all vanish).
    unsigned max_image_degree() const noexcept;

    /// Leibniz extension of the images on a representative, without reduction.
    Polynomial apply_raw(const Polynomial& f) const;
    /// D^times(f) in normal form.
    RingElement apply(const RingElement& f, unsigned times = 1) const;

    Derivation relabeled(std::string label) const;

private:
    Ring ring_;
    std::vector<RingElement> images_;
    std::string label_;
};

/// Least m <= bound with D^m(f) = 0, or nullopt when still nonzero at `bound`.
/// Kernel elements (including 0 and constants) have index 1.
std::optional<unsigned> nilpotency_index(const Derivation& d, const RingElement& f, unsigned bound = kDefaultMaxSteps);

struct NilpotencyCertificate {
    Derivation derivation;
    /// (variable name, index) in variable order; nullopt when inconclusive.
    std::vector<std::pair<std::string, std::optional<unsigned>>> per_generator_index;
    /// max index - 1: how many D-steps one degree of a monomial can absorb.
    unsigned global_bound_hint = 0;
    unsigned bound = kDefaultMaxSteps;
    bool certified = false;

    /// Upper bound on nilpotency_index of any element of degree <= d.
    unsigned index_bound_for_degree(unsigned d) const noexcept { return d * global_bound_hint + 1; }
};

/// Certified iff every generator is killed by some power of D within `bound`.
NilpotencyCertificate certify_lnd(const Derivation& d, unsigned bound = kDefaultMaxSteps);

/// C[T] with D~ agreeing with D on C and D~(T) = image (default 1). `image`
/// must be an element of the extended ring. Throws DuplicateVariable.
std::pair<Ring, Derivation> extend_with_new_variable(const Derivation& d, const std::string& name,
                                                     std::optional<Polynomial> image_in_extension = std::nullopt,
                                                     std::string label = {});

}  // namespace lnd
