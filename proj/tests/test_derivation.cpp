#include "lnd/derivation.hpp"
#include "lnd/errors.hpp"
#include "support/support.hpp"

#include <doctest.h>

using namespace lnd;
using namespace lnd::testing;

TEST_CASE("ill-defined derivation is rejected with its residue") {
    const auto fx = corpus_fixture("quadric_t");
    const Ring& b = fx.ring;
    try {
        Derivation(b, els(b, {"1", "0", "0", "0"}), "bad");
        FAIL("accepted an ill-defined derivation");
    } catch (const NotWellDefined& e) {
        CHECK(e.residue() == b->variable("y").repr());
        CHECK(std::string(e.what()).find("y") != std::string::npos);
    }
    CHECK_THROWS_AS(Derivation(b, els(b, {"0", "0"})), InvalidArgument);
}

TEST_CASE("certificates on the XY - Z^2 - 1 example") {
    const auto fx = corpus_fixture("quadric_t");
    const Derivation& d1 = fx.derivation("D1");
    const Derivation& d2 = fx.derivation("D2");
    const auto c1 = certify_lnd(d1);
    const auto c2 = certify_lnd(d2);
    REQUIRE(c1.certified);
    REQUIRE(c2.certified);
    std::vector<unsigned> i1, i2;
    for (const auto& [n, i] : c1.per_generator_index) i1.push_back(*i);
    for (const auto& [n, i] : c2.per_generator_index) i2.push_back(*i);
    CHECK(i1 == std::vector<unsigned>{1, 3, 2, 2});
    CHECK(i2 == std::vector<unsigned>{3, 1, 2, 2});
    CHECK(c1.global_bound_hint == 2);
    CHECK(c1.index_bound_for_degree(3) == 7);
    CHECK(d1.apply(fx.ring->variable("y"), 2) == el(fx.ring, "2*x"));
    CHECK(d1.max_image_degree() == 1);
}

TEST_CASE("nilpotency index conventions") {
    const auto fx = corpus_fixture("threefold");
    const Derivation& d2 = fx.derivation("D2");
    CHECK(nilpotency_index(d2, fx.ring->zero()) == 1u);
    CHECK(nilpotency_index(d2, fx.ring->constant(7)) == 1u);
    CHECK(nilpotency_index(d2, fx.ring->variable("y")) == 2u);
    CHECK(d2.apply(fx.ring->variable("y"), 2).is_zero());
    CHECK_THROWS_AS(nilpotency_index(d2, fx.ring->one(), 0), InvalidArgument);
    const auto zero = Derivation::zero(fx.ring);
    CHECK(certify_lnd(zero).certified);
}

TEST_CASE("Euler derivation is inconclusive, never refuted") {
    const auto ctx = VariableContext::make({"x"});
    const Ring b = make_ring(ctx, {});
    const Derivation e(b, {b->variable("x")}, "E");
    const auto cert = certify_lnd(e, 50);
    CHECK_FALSE(cert.certified);
    CHECK_FALSE(cert.per_generator_index[0].second.has_value());
    CHECK_FALSE(nilpotency_index(e, b->variable("x"), 50).has_value());
    CHECK(nilpotency_index(e, b->one(), 50) == 1u);
}

TEST_CASE("extension to B[u] with D(u) = 1") {
    const auto fx = corpus_fixture("threefold");
    const auto [ring, ext] = extend_with_new_variable(fx.derivation("D1"), "u");
    CHECK(ring->variable_count() == 5);
    CHECK(ext.label() == "D1~");
    CHECK(ext.apply(ring->variable("u")) == ring->one());
    for (VarIndex v = 0; v < 4; ++v) {
        CHECK(ext.image(v) == fx.derivation("D1").image(v).embed(ring));
    }
    CHECK(certify_lnd(ext).certified);
    CHECK_THROWS_AS(extend_with_new_variable(fx.derivation("D1"), "x"), DuplicateVariable);
    const auto [ring2, ext2] =
        extend_with_new_variable(fx.derivation("D1"), "w", parse_expression("x", VariableContext::make({"x", "y", "z", "t", "w"})), "E");
    CHECK(ext2.apply(ring2->variable("w")) == ring2->variable("x"));
}

TEST_CASE("representatives do not matter") {
    const auto fx = corpus_fixture("ufd_237");
    const Derivation& d = fx.derivation("delta2");
    const Ring& b = fx.ring;
    const Polynomial p = parse_expression("u*x - y*v", b->context());
    CHECK(b->reduce(d.apply_raw(p)) == b->reduce(d.apply_raw(Polynomial(b->context(), 1))));
    CHECK(d.apply(el(b, "u - y*T")) == el(b, "T*y - y"));
    CHECK(d.relabeled("e").label() == "e");
}
