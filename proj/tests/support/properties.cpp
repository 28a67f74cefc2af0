#include "properties.hpp"

#include "lnd/groebner.hpp"
#include "support.hpp"

#include <map>
#include <sstream>

namespace lnd::testing {
namespace {

class Tally {
public:
    explicit Tally(std::string name) { out_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        if (ok || case_failed_) return;
        case_failed_ = true;
        if (out_.failures++ == 0) out_.first_failure = what;
    }
    void next_case() {
        ++out_.cases;
        case_failed_ = false;
    }
    PropertyOutcome done() { return out_; }

private:
    PropertyOutcome out_;
    bool case_failed_ = false;
};

std::vector<Derivation> corpus_derivations() {
    std::vector<Derivation> out;
    for (const char* stem : {"quadric_t", "danielewski", "threefold", "threefold_u", "ufd_237"}) {
        for (const auto& nd : corpus_fixture(stem).derivations) {
            if (nd.derivation) out.push_back(*nd.derivation);
        }
    }
    return out;
}

struct DixmierCase {
    Derivation d;
    RingElement r;
    bool slice;
};

std::vector<DixmierCase> dixmier_cases() {
    std::vector<DixmierCase> out;
    auto add = [&](const char* stem, const char* name, const char* r) {
        const auto fx = corpus_fixture(stem);
        const Derivation& d = fx.derivation(name);
        const RingElement re = el(fx.ring, r);
        out.push_back({d, re, d.apply(re) == fx.ring->one()});
    };
    add("quadric_t", "D1", "T");
    add("quadric_t", "D2", "T");
    add("danielewski", "D", "y");
    add("threefold", "D1", "y");
    add("threefold", "D2", "z");
    add("threefold_u", "Dt1", "u");
    add("threefold_u", "Dt4", "u");
    add("ufd_237", "delta2", "T");
    return out;
}

std::string show(const RingElement& e) { return e.to_string(); }

}  // namespace

PropertyOutcome leibniz_and_linearity(std::size_t cases, std::uint64_t seed) {
    Tally t("leibniz and linearity of D");
    Rng rng(seed);
    const auto ds = corpus_derivations();
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const Derivation& d = ds[i % ds.size()];
        const Ring& ring = d.ring();
        const RingElement f = random_element(ring, 3, 4, rng);
        const RingElement g = random_element(ring, 3, 4, rng);
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        t.check(d.apply(f * g) == d.apply(f) * g + f * d.apply(g),
                d.label() + ": D(fg) != D(f)g + fD(g) for f = " + show(f) + ", g = " + show(g));
        t.check(d.apply(a * f + b * g) == a * d.apply(f) + b * d.apply(g),
                d.label() + ": D(af + bg) != aD(f) + bD(g) for f = " + show(f) + ", g = " + show(g));
    }
    return t.done();
}

PropertyOutcome representative_independence(std::size_t cases, std::uint64_t seed) {
    Tally t("representative independence");
    Rng rng(seed);
    const auto ds = corpus_derivations();
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const Derivation& d = ds[i % ds.size()];
        const Ring& ring = d.ring();
        const auto& relations = ring->relations();
        const Polynomial p = random_polynomial(ring->context(), 3, 4, rng);
        Polynomial shifted = p;
        for (const auto& r : relations) shifted += random_polynomial(ring->context(), 2, 3, rng) * r;
        t.check(ring->reduce(d.apply_raw(shifted)) == ring->reduce(d.apply_raw(p)),
                d.label() + ": D depends on the representative of " + ring->to_string(p));
    }
    return t.done();
}

PropertyOutcome dixmier_laws(std::size_t cases, std::uint64_t seed) {
    Tally t("dixmier homomorphism, image in kernel, pi_s(s f) = 0");
    Rng rng(seed);
    const auto cs = dixmier_cases();
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const DixmierCase& c = cs[i % cs.size()];
        const Ring& ring = c.d.ring();
        const RingElement f = random_element(ring, 2, 3, rng);
        const RingElement g = random_element(ring, 2, 3, rng);
        const std::string tag = c.d.label() + ", r = " + show(c.r) + ", f = " + show(f) + ", g = " + show(g);
        const LocalizedElement pf = dixmier_apply(c.d, c.r, f);
        const LocalizedElement pg = dixmier_apply(c.d, c.r, g);
        t.check(dixmier_apply(c.d, c.r, f + g) == pf + pg, "additivity fails: " + tag);
        t.check(dixmier_apply(c.d, c.r, f * g) == pf * pg, "multiplicativity fails: " + tag);
        t.check(c.d.apply(pf.numerator()).is_zero(), "image outside the kernel: " + tag);
        t.check(dixmier_apply(c.d, c.r, pf.numerator()) == LocalizedElement::embed(pf.numerator(), pf.denominator_base()),
                "kernel element moved: " + tag);
        if (c.slice) {
            t.check(dixmier_apply_slice(c.d, c.r, c.r * f).is_zero(), "pi_s(s f) != 0: " + tag);
        }
    }
    return t.done();
}

PropertyOutcome normal_form_laws(std::size_t cases, std::uint64_t seed) {
    Tally t("normal form linearity, ideal annihilation, idempotence");
    Rng rng(seed);
    std::vector<Ring> rings;
    for (const char* stem : {"quadric_t", "danielewski", "threefold", "ufd_237"}) {
        rings.push_back(corpus_fixture(stem).ring);
        rings.push_back(corpus_fixture(stem, OrderKind::lex).ring);
    }
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const Ring& ring = rings[i % rings.size()];
        const auto& ctx = ring->context();
        const Polynomial f = random_polynomial(ctx, 4, 5, rng);
        const Polynomial g = random_polynomial(ctx, 4, 5, rng);
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const std::string tag = " for f = " + ring->to_string(f) + " (" + to_string(ring->order().kind()) + ")";
        const Polynomial nf = ring->reduce(f);
        t.check(ring->reduce(a * f + b * g) == a * nf + b * ring->reduce(g), "not linear" + tag);
        t.check(ring->reduce(nf) == nf, "not idempotent" + tag);
        for (const auto& [m, c] : nf.terms()) t.check(ring->is_standard(m), "non-standard term" + tag);
        for (const auto& r : ring->relations()) {
            t.check(ring->reduce(f * r).is_zero(), "f * relation not reduced to zero" + tag);
        }
        for (const auto& gb : ring->groebner()) {
            t.check(ring->reduce(g * gb + f) == nf, "nf(f + q * g_i) != nf(f)" + tag);
        }
    }
    return t.done();
}

PropertyOutcome span_laws(std::size_t cases, std::uint64_t seed) {
    Tally t("span monotonicity and intersection containment");
    Rng rng(seed);
    const auto ex6 = corpus_fixture("threefold");
    const auto ex1 = corpus_fixture("quadric_t");
    LabOptions opts;
    opts.execution = kernels::Execution::serial;
    std::map<std::string, SpanBasis> kernels;
    for (const auto* fx : {&ex6, &ex1}) {
        for (const auto& nd : fx->derivations) {
            kernels.emplace(fx->fixture.id + nd.name, kernel_basis_bounded(*nd.derivation, 2, opts));
        }
    }
    std::vector<const SpanBasis*> kernel_list;
    for (const auto& [k, v] : kernels) kernel_list.push_back(&v);

    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const SpanBasis& kernel = *kernel_list[i % kernel_list.size()];
        const Ring& ring = kernel.ring();
        std::vector<RingElement> gens{random_nonzero_element(ring, 1, 2, rng)};
        if (rng() % 2) gens.push_back(random_nonzero_element(ring, 1, 2, rng));
        const SpanBasis small = subalgebra_span_bounded(ring, gens, 2, opts);
        std::vector<RingElement> more = gens;
        more.push_back(random_nonzero_element(ring, 1, 2, rng));
        const SpanBasis large = subalgebra_span_bounded(ring, more, 2, opts);
        const std::string tag = " (generators from " + show(gens.front()) + ")";
        t.check(span_contains(large, small), "adding a generator lost elements" + tag);
        const SpanBasis higher = subalgebra_span_bounded(ring, gens, 3, opts);
        for (const auto& e : small.elements()) {
            t.check(membership_in_span(e, higher), "degree 2 element missing at degree 3" + tag);
        }
        const std::vector<SpanBasis> pair{kernel, large};
        const SpanBasis meet = intersect_spans(pair);
        t.check(span_contains(kernel, meet) && span_contains(large, meet), "intersection not contained" + tag);
        const std::vector<SpanBasis> twice{small, small};
        t.check(same_span(intersect_spans(twice), small), "intersection not idempotent" + tag);
    }
    return t.done();
}

PropertyOutcome parser_round_trip(std::size_t cases, std::uint64_t seed) {
    Tally t("parser round trip");
    Rng rng(seed);
    std::vector<Ring> rings;
    for (const char* stem : {"quadric_t", "threefold_u", "ufd_237"}) {
        rings.push_back(corpus_fixture(stem).ring);
        rings.push_back(corpus_fixture(stem, OrderKind::lex).ring);
    }
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const Ring& ring = rings[i % rings.size()];
        const Polynomial p = random_polynomial(ring->context(), 5, 6, rng);
        const std::string text = p.to_string(ring->order());
        t.check(parse_expression(text, ring->context()) == p, "polynomial text did not round-trip: " + text);
        const RingElement e = ring->element(p);
        t.check(parse_element(e.to_string(), ring) == e, "element text did not round-trip: " + e.to_string());
    }
    return t.done();
}

PropertyOutcome ring_axioms(std::size_t cases, std::uint64_t seed) {
    Tally t("commutative ring axioms in B");
    Rng rng(seed);
    std::vector<Ring> rings;
    for (const char* stem : {"quadric_t", "danielewski", "threefold", "ufd_237"}) rings.push_back(corpus_fixture(stem).ring);
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const Ring& ring = rings[i % rings.size()];
        const RingElement a = random_element(ring, 3, 3, rng);
        const RingElement b = random_element(ring, 3, 3, rng);
        const RingElement c = random_element(ring, 2, 3, rng);
        const std::string tag = " for a = " + show(a) + ", b = " + show(b);
        t.check(a * b == b * a, "multiplication not commutative" + tag);
        t.check((a * b) * c == a * (b * c), "multiplication not associative" + tag);
        t.check(a * (b + c) == a * b + a * c, "not distributive" + tag);
        t.check(a + (-a) == ring->zero() && a * ring->one() == a, "identities fail" + tag);
        t.check(a.pow(2) * a == a.pow(3), "powers inconsistent" + tag);
    }
    return t.done();
}

PropertyOutcome inertness(std::size_t cases, std::uint64_t seed) {
    Tally t("kernel is inert: D(f) != 0, g != 0 => D(fg) != 0");
    Rng rng(seed);
    std::vector<Derivation> ds;
    for (const char* stem : {"quadric_t", "threefold", "threefold_u", "ufd_237"}) {
        for (const auto& nd : corpus_fixture(stem).derivations) ds.push_back(*nd.derivation);
    }
    std::size_t i = 0;
    while (t.done().cases < cases) {
        const Derivation& d = ds[i++ % ds.size()];
        const RingElement f = random_element(d.ring(), 2, 3, rng);
        if (d.apply(f).is_zero()) continue;
        t.next_case();
        const RingElement g = random_nonzero_element(d.ring(), 2, 3, rng);
        t.check(!d.apply(f * g).is_zero(),
                d.label() + ": D(fg) = 0 with D(f) != 0, f = " + show(f) + ", g = " + show(g));
    }
    return t.done();
}

PropertyOutcome nilpotency_index_bound(std::size_t cases, std::uint64_t seed) {
    Tally t("index of f within the certificate bound");
    Rng rng(seed);
    std::vector<NilpotencyCertificate> certs;
    for (const auto& d : corpus_derivations()) certs.push_back(certify_lnd(d));
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const auto& cert = certs[i % certs.size()];
        const RingElement f = random_element(cert.derivation.ring(), 3, 4, rng);
        const unsigned bound = cert.index_bound_for_degree(static_cast<unsigned>(std::max(f.degree(), 0)));
        const auto index = nilpotency_index(cert.derivation, f, bound);
        t.check(cert.certified && index.has_value(),
                cert.derivation.label() + ": index of " + show(f) + " exceeds " + std::to_string(bound));
    }
    return t.done();
}

PropertyOutcome certificate_soundness(std::size_t, std::uint64_t) {
    Tally t("certificate indices are exact");
    for (const auto& d : corpus_derivations()) {
        const auto cert = certify_lnd(d);
        for (std::size_t v = 0; v < cert.per_generator_index.size(); ++v) {
            t.next_case();
            const auto& [name, index] = cert.per_generator_index[v];
            const RingElement x = d.ring()->variable(static_cast<VarIndex>(v));
            const bool ok = index && d.apply(x, *index).is_zero() && !d.apply(x, *index - 1).is_zero();
            t.check(ok, d.label() + ": wrong index for " + name);
        }
    }
    return t.done();
}

PropertyOutcome kernel_rows_annihilated(std::size_t cases, std::uint64_t seed) {
    Tally t("random kernel-span elements are killed by D");
    Rng rng(seed);
    std::vector<std::pair<Derivation, SpanBasis>> kernels;
    for (const char* stem : {"quadric_t", "threefold", "ufd_237"}) {
        for (const auto& nd : corpus_fixture(stem).derivations) {
            kernels.emplace_back(*nd.derivation, kernel_basis_bounded(*nd.derivation, 2));
        }
    }
    for (std::size_t i = 0; i < cases; ++i) {
        t.next_case();
        const auto& [d, k] = kernels[i % kernels.size()];
        RingElement combo = k.ring()->zero();
        for (const auto& e : k.elements()) combo += random_rational(rng) * e;
        t.check(d.apply(combo).is_zero(), d.label() + "(" + show(combo) + ") != 0");
    }
    return t.done();
}

const std::vector<NamedSuite>& required_suites() {
    static const std::vector<NamedSuite> suites{
        {"leibniz-linearity", leibniz_and_linearity},
        {"representative-independence", representative_independence},
        {"dixmier", dixmier_laws},
        {"normal-form", normal_form_laws},
        {"spans", span_laws},
        {"parser-round-trip", parser_round_trip},
    };
    return suites;
}

const std::vector<NamedSuite>& extra_suites() {
    static const std::vector<NamedSuite> suites{
        {"ring-axioms", ring_axioms},
        {"inertness", inertness},
        {"index-bound", nilpotency_index_bound},
        {"certificate-soundness", certificate_soundness},
        {"kernel-rows", kernel_rows_annihilated},
    };
    return suites;
}

}  // namespace lnd::testing
