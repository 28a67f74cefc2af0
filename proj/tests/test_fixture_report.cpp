#include "lnd/verify.hpp"
#include "support/support.hpp"

#include <doctest.h>

using namespace lnd;
using namespace lnd::testing;

namespace {

constexpr const char* kSmall = R"(# comment line
title = "small"

[ring]
variables = ["x", "y"]
relations = [
  "x*y - 1",   # the hyperbola
]

[derivation.D]
x = "x"
y = "-y"

[[expect]]
claim = "well-defined"
derivation = "D"

[[expect]]
claim = "lnd-inconclusive"
derivation = "D"
bound = 10

[annotations]
note = "multiplicative group"
)";

}  // namespace

TEST_CASE("fixture tables parse") {
    const Fixture f = parse_fixture(kSmall, "small");
    CHECK(f.id == "small");
    CHECK(f.title == "small");
    CHECK(f.variables == std::vector<std::string>{"x", "y"});
    CHECK(f.relations == std::vector<std::string>{"x*y - 1"});
    CHECK(f.order == "grevlex");
    REQUIRE(f.derivations.size() == 1);
    CHECK(f.derivations[0].images.size() == 2);
    REQUIRE(f.expectations.size() == 2);
    CHECK(f.expectations[1].integer("bound") == 10);
    CHECK(f.annotations.size() == 1);
}

TEST_CASE("fixture errors name the line") {
    const auto line_of = [](const char* text) -> int {
        try {
            parse_fixture(text, "bad");
        } catch (const FixtureError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("[ring]\nvariables = [\"x\"]\nvariables = [\"y\"]\n") == 3);
    CHECK(line_of("[ring]\nvariables = \"x\n") == 2);
    CHECK_THROWS_AS(parse_fixture("title = \"t\"\n[derivation.D]\nx = \"1\"\n", "no-ring"), FixtureError);
    CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.toml"), FixtureError);
}

TEST_CASE("instantiation builds extensions and keeps rejected derivations") {
    const auto ex7 = corpus_fixture("threefold_u");
    CHECK(ex7.ring->variable_count() == 5);
    CHECK(ex7.base_ring->variable_count() == 4);
    CHECK(ex7.derivations.size() == 5);
    CHECK(ex7.find("D1") == nullptr);
    CHECK_THROWS_AS(ex7.derivation("nope"), FixtureError);

    const auto neg = instantiate(load_fixture(LND_TEST_DATA_DIR "/negative_controls.toml"));
    const NamedDerivation* bad = neg.find("bad");
    REQUIRE(bad != nullptr);
    CHECK_FALSE(bad->derivation.has_value());
    REQUIRE(bad->residue.has_value());
    CHECK(*bad->residue == neg.ring->variable("y").repr());
    CHECK_THROWS_AS(neg.derivation("bad"), FixtureError);

    const auto lex = corpus_fixture("threefold", OrderKind::lex);
    CHECK(lex.ring->order().kind() == OrderKind::lex);
}

TEST_CASE("reports render text and JSON") {
    const auto fx = instantiate(parse_fixture(kSmall, "small"));
    const VerificationReport report = verify_fixture(fx, RunOptions{});
    CHECK(report.passed());
    CHECK(report.exit_code() == 0);
    const std::string text = report.render_text();
    CHECK(text.find("[PASS] lnd-inconclusive D") != std::string::npos);
    const auto j = report.to_json();
    CHECK(j["fixture"] == "small");
    CHECK(j["status"] == "pass");
    CHECK(j["claims"].size() == 2);
    CHECK(j["claims"][1]["claim"] == "lnd-inconclusive");
    CHECK(j["annotations"]["note"] == "multiplicative group");
}

TEST_CASE("corrupted golden fails with a witness") {
    const auto report = run_fixture(LND_TEST_DATA_DIR "/quadric_t_corrupted.toml", RunOptions{});
    CHECK_FALSE(report.passed());
    CHECK(report.exit_code() == 1);
    bool saw = false;
    for (const auto& c : report.claims) {
        if (c.claim == "kernel-generators" && c.subject == "D1") {
            saw = true;
            CHECK(c.status == ClaimStatus::fail);
            CHECK(c.witness.find("x*T^2 - z*T + y") != std::string::npos);
        }
    }
    CHECK(saw);
}

TEST_CASE("every corpus fixture passes") {
    for (const char* stem : {"quadric_t", "danielewski", "threefold", "threefold_u", "ufd_237"}) {
        const auto report = run_fixture(std::string(LND_CORPUS_DIR) + "/" + stem + ".toml", RunOptions{});
        INFO(report.render_text());
        CHECK(report.passed());
    }
    CHECK(run_fixture(LND_TEST_DATA_DIR "/euler.toml", RunOptions{}).passed());
    CHECK(run_fixture(LND_TEST_DATA_DIR "/negative_controls.toml", RunOptions{}).passed());
}

TEST_CASE("unknown claims and broken expectations are failures, not crashes") {
    std::string text = kSmall;
    text += "\n[[expect]]\nclaim = \"slice\"\nderivation = \"D\"\nslice = \"x\"\n";
    text += "\n[[expect]]\nclaim = \"lnd-certified\"\nderivation = \"missing\"\n";
    const auto report = verify_fixture(instantiate(parse_fixture(text, "t")), RunOptions{});
    CHECK_FALSE(report.passed());
    CHECK(report.claims.size() == 4);
    CHECK(report.claims[2].status == ClaimStatus::fail);
    CHECK(report.claims[3].status == ClaimStatus::fail);
}
