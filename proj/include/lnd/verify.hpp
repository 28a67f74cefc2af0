#pragma once

#include "lnd/fixture.hpp"
#include "lnd/invariant_lab.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lnd {

enum class ClaimStatus { pass, fail, inconclusive };

std::string to_string(ClaimStatus status);

struct ClaimResult {
    std::string claim;
    std::string subject;    // derivation names etc.
    ClaimStatus status = ClaimStatus::fail;
    std::string detail;
    std::string witness;    // exact counterexample for a failure
    std::optional<unsigned> degree;
    double millis = 0;
};

struct VerificationReport {
    std::string fixture;
    std::string title;
    std::vector<ClaimResult> claims;
    std::vector<std::pair<std::string, std::string>> annotations;
    unsigned max_steps = kDefaultMaxSteps;
    double millis = 0;

    bool passed() const;
    /// 0 when every claim passes, 1 otherwise.
    int exit_code() const { return passed() ? 0 : 1; }

    std::string render_text() const;
    nlohmann::json to_json() const;
};

struct RunOptions {
    unsigned degree = 3;
    unsigned max_steps = kDefaultMaxSteps;
    std::optional<OrderKind> order;
    LabOptions lab;
};

/// Runs every expectation of an instantiated fixture. Claim-level errors are
/// recorded as failures; remaining claims still run.
VerificationReport verify_fixture(const FixtureInstance& instance, const RunOptions& options);

/// Loads, instantiates and verifies. Throws FixtureError / ParseError / ring
/// construction errors when the file itself is unusable.
VerificationReport run_fixture(const std::string& path, const RunOptions& options);

}  // namespace lnd
