#include "lnd/invariant_lab.hpp"

#include "lnd/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lnd {

SpanBasis::SpanBasis(Ring ring, unsigned degree_bound, std::vector<Monomial> frame, Echelon basis,
                     std::string provenance)
    : ring_(std::move(ring)),
      degree_bound_(degree_bound),
      frame_(std::move(frame)),
      basis_(std::move(basis)),
      provenance_(std::move(provenance)) {
    for (std::size_t i = 0; i < frame_.size(); ++i) column_.emplace(frame_[i], i);
}

RingElement SpanBasis::element(std::size_t row) const {
    Polynomial p(ring_->context());
    for (std::size_t j = 0; j < frame_.size(); ++j) p.add_term(frame_[j], basis_.rref(row, j));
    return RingElement(ring_, std::move(p));
}

std::vector<RingElement> SpanBasis::elements() const {
    std::vector<RingElement> out;
    for (std::size_t r = 0; r < dimension(); ++r) out.push_back(element(r));
    return out;
}

std::vector<Rational> SpanBasis::coordinates(const RingElement& f) const {
    if (!same_ring(f.ring(), ring_)) throw ContextMismatch();
    if (f.degree() > static_cast<int>(degree_bound_)) {
        throw DegreeOverflow("element " + f.to_string() + " has degree " + std::to_string(f.degree()) +
                             " above the bound " + std::to_string(degree_bound_));
    }
    std::vector<Rational> v(frame_.size());
    for (const auto& [m, c] : f.repr().terms()) v[column_.at(m)] = c;
    return v;
}

std::string SpanBasis::describe() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < dimension(); ++r) os << (r ? ", " : "") << element(r).to_string();
    os << "}";
    return os.str();
}

std::vector<Monomial> standard_monomials(const Ring& ring, unsigned d, std::size_t cap) {
    const std::size_t n = ring->variable_count();
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> factors;
    std::function<void(VarIndex, unsigned)> walk = [&](VarIndex v, unsigned budget) {
        if (v == n) {
            Monomial m(factors);
            if (ring->is_standard(m)) {
                if (out.size() >= cap) throw ResourceBound("monomial frame of degree " + std::to_string(d), cap);
                out.push_back(std::move(m));
            }
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            if (e > 0) factors.emplace_back(v, e);
            walk(v + 1, budget - e);
            if (e > 0) factors.pop_back();
        }
    };
    walk(0, d);
    const TermOrder& order = ring->order();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
    return out;
}

namespace {

// Rows of a coordinate matrix for a list of polynomials over a frame given by index lookup.
Echelon echelon_of(const std::vector<Polynomial>& polys, const std::map<Monomial, std::size_t>& column,
                   std::size_t width) {
    RationalMatrix m(polys.size(), width);
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [mono, c] : polys[r].terms()) m(r, column.at(mono)) = c;
    }
    return reduced_row_echelon(m);
}

std::map<Monomial, std::size_t> index_frame(const std::vector<Monomial>& frame) {
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < frame.size(); ++i) column.emplace(frame[i], i);
    return column;
}

void require_same_frame(const SpanBasis& a, const SpanBasis& b) {
    if (!same_ring(a.ring(), b.ring())) throw ContextMismatch();
    if (a.degree_bound() != b.degree_bound() || a.frame() != b.frame()) {
        throw InvalidArgument("spans have different degree bounds (" + std::to_string(a.degree_bound()) + " vs " +
                              std::to_string(b.degree_bound()) + ")");
    }
}

}  // namespace

SpanBasis kernel_basis_bounded(const Derivation& d, unsigned degree, const LabOptions& options) {
    const Ring& ring = d.ring();
    std::vector<Monomial> frame = standard_monomials(ring, degree, options.max_frame);
    const std::vector<Polynomial> images = kernels::derivation_images(d, frame, options.execution);

    // Target frame: every monomial that actually occurs in an image.
    std::map<Monomial, std::size_t> target;
    for (const auto& img : images) {
        for (const auto& [m, c] : img.terms()) target.emplace(m, 0);
    }
    if (target.size() > options.max_frame) throw ResourceBound("target frame", options.max_frame);
    std::size_t next = 0;
    for (auto& [m, idx] : target) idx = next++;

    RationalMatrix map(target.size(), frame.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const auto& [m, c] : images[j].terms()) map(target.at(m), j) = c;
    }
    RationalMatrix kernel = nullspace(map);
    Echelon basis = kernel.rows() == 0 ? Echelon{RationalMatrix(0, frame.size()), {}} : reduced_row_echelon(kernel);
    return SpanBasis(ring, degree, std::move(frame), std::move(basis),
                     "kernel(" + d.label() + ", d=" + std::to_string(degree) + ")");
}

SpanBasis subalgebra_span_bounded(const Ring& ring, std::span<const RingElement> gens, unsigned degree,
                                  const LabOptions& options) {
    std::vector<Monomial> frame = standard_monomials(ring, degree, options.max_frame);
    const auto column = index_frame(frame);

    std::vector<RingElement> nonconstant;
    std::ostringstream label;
    for (const auto& g : gens) {
        if (!same_ring(g.ring(), ring)) throw ContextMismatch();
        label << (label.tellp() > 0 ? ", " : "") << g.to_string();
        if (!g.is_constant()) nonconstant.push_back(g);
    }

    // Exponent tuples with at most `degree` factors in total.
    std::vector<std::vector<unsigned>> exponents;
    std::vector<unsigned> current(nonconstant.size(), 0);
    std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned budget) {
        if (i == nonconstant.size()) {
            exponents.push_back(current);
            if (exponents.size() > options.max_frame) throw ResourceBound("power-product enumeration", options.max_frame);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            current[i] = e;
            walk(i + 1, budget - e);
        }
        current[i] = 0;
    };
    walk(0, degree);

    std::vector<Polynomial> products = kernels::power_products(nonconstant, exponents, options.execution);
    std::vector<Polynomial> kept{Polynomial(ring->context(), Rational(1))};
    for (auto& p : products) {
        if (p.degree() <= static_cast<int>(degree)) kept.push_back(std::move(p));
    }
    return SpanBasis(ring, degree, frame, echelon_of(kept, column, frame.size()),
                     "subalgebra({" + label.str() + "}, d=" + std::to_string(degree) + ")");
}

SpanBasis constants_span(const Ring& ring, unsigned degree, const LabOptions& options) {
    return subalgebra_span_bounded(ring, {}, degree, options);
}

SpanBasis intersect_spans(std::span<const SpanBasis> bases) {
    if (bases.empty()) throw InvalidArgument("intersection of no spans");
    const SpanBasis& first = bases.front();
    std::ostringstream label;
    label << "intersection(";
    RationalMatrix annihilators(0, first.frame().size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        require_same_frame(first, bases[i]);
        label << (i ? ", " : "") << bases[i].provenance();
        RationalMatrix ann = nullspace(bases[i].basis().rref);
        for (std::size_t r = 0; r < ann.rows(); ++r) annihilators.append_row(ann.row(r));
    }
    label << ")";
    RationalMatrix common = nullspace(annihilators);
    Echelon basis =
        common.rows() == 0 ? Echelon{RationalMatrix(0, first.frame().size()), {}} : reduced_row_echelon(common);
    return SpanBasis(first.ring(), first.degree_bound(), first.frame(), std::move(basis), label.str());
}

SpanBasis ml_star_estimate_bounded(std::span<const SliceWitness> family, unsigned degree, const LabOptions& options) {
    if (family.empty()) {
        throw InvalidArgument("ML* estimate needs at least one derivation with a slice");
    }
    std::vector<SpanBasis> kernels;
    for (const auto& [d, s] : family) {
        if (!(d.apply(s) == d.ring()->one())) {
            throw SliceVerificationFailed(d.label() + "(" + s.to_string() + ") = " + d.apply(s).to_string() +
                                          ", not 1");
        }
        if (!certify_lnd(d, options.max_steps).certified) {
            throw UncertifiedDerivation("derivation " + d.label() + " is not certified locally nilpotent");
        }
        kernels.push_back(kernel_basis_bounded(d, degree, options));
    }
    return intersect_spans(kernels);
}

bool membership_in_span(const RingElement& f, const SpanBasis& span) {
    return in_row_space(span.basis(), span.coordinates(f));
}

bool span_contains(const SpanBasis& outer, const SpanBasis& inner) {
    require_same_frame(outer, inner);
    for (std::size_t r = 0; r < inner.dimension(); ++r) {
        if (!in_row_space(outer.basis(), inner.basis().rref.row(r))) return false;
    }
    return true;
}

bool same_span(const SpanBasis& a, const SpanBasis& b) {
    return a.dimension() == b.dimension() && span_contains(a, b);
}

std::optional<RingElement> element_outside(const SpanBasis& a, const SpanBasis& b) {
    require_same_frame(a, b);
    // Rows are sorted by descending pivot; walk from the lowest degree up.
    for (std::size_t r = a.dimension(); r-- > 0;) {
        if (!in_row_space(b.basis(), a.basis().rref.row(r))) return a.element(r).monic();
    }
    return std::nullopt;
}

KernelDistinctness kernels_distinct_bounded(const Derivation& d1, const Derivation& d2, unsigned degree,
                                            const LabOptions& options) {
    const SpanBasis k1 = kernel_basis_bounded(d1, degree, options);
    const SpanBasis k2 = kernel_basis_bounded(d2, degree, options);
    if (auto w = element_outside(k1, k2)) return {true, std::move(w), 1};
    if (auto w = element_outside(k2, k1)) return {true, std::move(w), 2};
    return {};
}

}  // namespace lnd
