#include "lnd/derivation.hpp"

#include <algorithm>

namespace lnd {

Derivation::Derivation(Ring ring, std::vector<RingElement> images, std::string label)
    : ring_(std::move(ring)), images_(std::move(images)), label_(std::move(label)) {
    if (images_.size() != ring_->variable_count()) {
        throw InvalidArgument("derivation " + label_ + " needs " + std::to_string(ring_->variable_count()) +
                              " images, got " + std::to_string(images_.size()));
    }
    for (const auto& img : images_) {
        if (!same_ring(img.ring(), ring_)) throw ContextMismatch();
    }
    for (const auto& relation : ring_->relations()) {
        Polynomial residue = ring_->reduce(apply_raw(relation));
        if (!residue.is_zero()) {
            throw NotWellDefined(relation, residue,
                                 "derivation " + label_ + " is not well defined: D(" + ring_->to_string(relation) +
                                     ") reduces to " + ring_->to_string(residue));
        }
    }
}

Derivation Derivation::zero(const Ring& ring, std::string label) {
    return Derivation(ring, std::vector<RingElement>(ring->variable_count(), ring->zero()), std::move(label));
}

unsigned Derivation::max_image_degree() const noexcept {
    int d = 0;
    for (const auto& img : images_) d = std::max(d, img.degree());
    return static_cast<unsigned>(d);
}

Polynomial Derivation::apply_raw(const Polynomial& f) const {
    Polynomial out(ring_->context());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.factors()) {
            const Polynomial& image = images_[v].repr();
            if (image.is_zero()) continue;
            out.add_scaled(c * e, m / Monomial::variable(v), image);
        }
    }
    return out;
}

RingElement Derivation::apply(const RingElement& f, unsigned times) const {
    if (!same_ring(f.ring(), ring_)) throw ContextMismatch();
    Polynomial current = f.repr();
    for (unsigned i = 0; i < times && !current.is_zero(); ++i) current = ring_->reduce(apply_raw(current));
    return RingElement(ring_, std::move(current));
}

Derivation Derivation::relabeled(std::string label) const {
    Derivation copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

std::optional<unsigned> nilpotency_index(const Derivation& d, const RingElement& f, unsigned bound) {
    if (bound == 0) throw InvalidArgument("nilpotency bound must be at least 1");
    RingElement current = f;
    for (unsigned m = 1; m <= bound; ++m) {
        current = d.apply(current);
        if (current.is_zero()) return m;
    }
    return std::nullopt;
}

NilpotencyCertificate certify_lnd(const Derivation& d, unsigned bound) {
    NilpotencyCertificate cert{d, {}, 0, bound, true};
    unsigned max_index = 1;
    const Ring& ring = d.ring();
    for (VarIndex v = 0; v < ring->variable_count(); ++v) {
        auto index = nilpotency_index(d, ring->variable(v), bound);
        cert.per_generator_index.emplace_back(ring->variables()[v], index);
        if (index) {
            max_index = std::max(max_index, *index);
        } else {
            cert.certified = false;
        }
    }
    cert.global_bound_hint = max_index - 1;
    return cert;
}

std::pair<Ring, Derivation> extend_with_new_variable(const Derivation& d, const std::string& name,
                                                     std::optional<Polynomial> image_in_extension,
                                                     std::string label) {
    if (d.ring()->context()->index_of(name)) throw DuplicateVariable(name);
    Ring wider = adjoin_variable(d.ring(), name);
    std::vector<RingElement> images;
    images.reserve(wider->variable_count());
    for (const auto& img : d.images()) images.push_back(img.embed(wider));
    if (image_in_extension) {
        images.push_back(wider->element(image_in_extension->embed(wider->context())));
    } else {
        images.push_back(wider->one());
    }
    if (label.empty()) label = d.label() + "~";
    return {wider, Derivation(wider, std::move(images), std::move(label))};
}

}  // namespace lnd
