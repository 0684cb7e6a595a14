#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace difflat::cli {

struct ClaimOutcome {
    nlohmann::json expected;
    nlohmann::json computed;
    bool pass = false;
    /// Range or scope actually covered, e.g. "n = 1..10".
    std::string scope;
};

struct VerifyContext {
    std::size_t max_n = 5;
    unsigned jobs = 1;
};

struct Claim {
    std::string id;
    std::string statement;
    /// Where the expected value comes from: "formula", "worked example tables", "reference search", ...
    std::string expected_source;
    std::function<ClaimOutcome(const VerifyContext &)> run;
};

struct ClaimResult {
    std::string id;
    std::string statement;
    std::string expected_source;
    ClaimOutcome outcome;
    double runtime_ms = 0;
    std::string error;
};

struct VerificationReport {
    std::string suite;
    std::size_t max_n = 0;
    std::vector<ClaimResult> results;

    [[nodiscard]] auto passed() const -> bool;
    [[nodiscard]] auto to_json() const -> nlohmann::json;
};

/// The registered claims, in reporting order. Every suite runs all of them.
auto claim_registry() -> const std::vector<Claim> &;

/// Known suite names and their default max_n.
auto suite_default_max_n(const std::string & suite) -> std::size_t;
auto is_known_suite(const std::string & suite) -> bool;

auto run_claims(const std::string & suite, const VerifyContext & ctx) -> VerificationReport;

} // namespace difflat::cli
