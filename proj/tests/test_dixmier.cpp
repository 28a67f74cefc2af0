#include "lnd/dixmier.hpp"
#include "lnd/errors.hpp"
#include "lnd/invariant_lab.hpp"
#include "support/support.hpp"

#include <doctest.h>

using namespace lnd;
using namespace lnd::testing;

TEST_CASE("slice search finds T for both derivations on XY - Z^2 - 1") {
    const auto fx = corpus_fixture("quadric_t");
    for (const char* name : {"D1", "D2"}) {
        const auto report = find_slices(fx.derivation(name));
        CHECK(std::find(report.slices.begin(), report.slices.end(), fx.ring->variable("T")) != report.slices.end());
        for (const auto& s : report.slices) CHECK(fx.derivation(name).apply(s) == fx.ring->one());
        CHECK_FALSE(report.search_space.empty());
    }
}

TEST_CASE("local slices without slices") {
    const auto fx = corpus_fixture("danielewski");
    const auto report = find_slices(fx.derivation("D"));
    CHECK(report.slices.empty());
    REQUIRE_FALSE(report.local_slices.empty());
    for (const auto& ls : report.local_slices) {
        CHECK_FALSE(ls.t.is_zero());
        CHECK(fx.derivation("D").apply(ls.t).is_zero());
    }
    const std::vector<RingElement> extra{el(fx.ring, "y + x")};
    const auto with_extra = find_slices(fx.derivation("D"), extra);
    CHECK(with_extra.local_slices.size() >= report.local_slices.size());
}

TEST_CASE("dixmier map values") {
    const auto fx = corpus_fixture("quadric_t");
    const Derivation& d1 = fx.derivation("D1");
    const RingElement t = fx.ring->variable("T");
    CHECK(dixmier_apply_slice(d1, t, fx.ring->variable("y")) == el(fx.ring, "y - 2*z*T + x*T^2"));
    CHECK(dixmier_apply_slice(d1, t, t).is_zero());
    CHECK(dixmier_apply_slice(d1, t, fx.ring->variable("x")) == fx.ring->variable("x"));

    const auto fx6 = corpus_fixture("threefold");
    const Derivation& d2 = fx6.derivation("D2");
    const LocalizedElement img = dixmier_apply(d2, fx6.ring->variable("z"), fx6.ring->variable("y"));
    CHECK(img == LocalizedElement(fx6.ring->one(), fx6.ring->variable("x"), 1));
    CHECK(d2.apply(img.numerator()).is_zero());
}

TEST_CASE("dixmier map preconditions") {
    const auto fx = corpus_fixture("threefold");
    const Derivation& d1 = fx.derivation("D1");
    CHECK_THROWS_AS(dixmier_apply(d1, fx.ring->variable("x"), fx.ring->one()), NotLocalSlice);
    CHECK_THROWS_AS(dixmier_apply(d1, el(fx.ring, "y*t"), fx.ring->one()), NotLocalSlice);
    CHECK_THROWS_AS(dixmier_apply_slice(d1, fx.ring->variable("y"), fx.ring->one()), NotASlice);

    const auto ctx = VariableContext::make({"x", "y"});
    const Ring b = make_ring(ctx, {});
    const Derivation d(b, {b->one(), b->variable("y")}, "partly Euler");
    CHECK_THROWS_AS(dixmier_apply(d, b->variable("x"), b->variable("x"), 20), UncertifiedDerivation);
}

TEST_CASE("kernel generators via slices") {
    const auto fx = corpus_fixture("quadric_t");
    const auto k1 = kernel_via_slice(fx.derivation("D1"), fx.ring->variable("T"));
    CHECK(k1.generators == normalize_generators(els(fx.ring, {"x", "y - 2*z*T + x*T^2", "z - x*T"})));
    const auto k2 = kernel_via_slice(fx.derivation("D2"), fx.ring->variable("T"));
    CHECK(k2.generators == normalize_generators(els(fx.ring, {"y", "x - 2*z*T + y*T^2", "z - y*T"})));

    const auto fx8 = corpus_fixture("ufd_237");
    const auto k = kernel_via_slice(fx8.derivation("delta2"), fx8.ring->variable("T"));
    CHECK(k.generators ==
          normalize_generators(els(fx8.ring, {"x", "y", "z", "2*u - y*T^2", "2*v - x*T^2"})));
    for (const auto& g : k.generators) CHECK(fx8.derivation("delta2").apply(g).is_zero());
}

TEST_CASE("the variables lie in Ker D [s]") {
    for (const auto& [stem, name, slice, degree] :
         {std::tuple{"quadric_t", "D1", "T", 3u}, std::tuple{"threefold_u", "Dt1", "u", 2u}}) {
        const auto fx = corpus_fixture(stem);
        const auto k = kernel_via_slice(fx.derivation(name), el(fx.ring, slice));
        std::vector<RingElement> gens = k.generators;
        gens.push_back(el(fx.ring, slice));
        const SpanBasis span = subalgebra_span_bounded(fx.ring, gens, degree);
        for (VarIndex v = 0; v < fx.ring->variable_count(); ++v) {
            CHECK(membership_in_span(fx.ring->variable(v), span));
        }
    }
}

TEST_CASE("normalized generator sets") {
    const auto fx = corpus_fixture("quadric_t");
    const auto out = normalize_generators(els(fx.ring, {"-2*x", "x", "3", "0", "z - x*T"}));
    CHECK(rendered(out) == std::vector<std::string>{"x", "x*T - z"});
}
