#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ivp {

inline constexpr const char* kToolchainStamp = "ivp 1.0.0";

enum class VerifyStatus { Pass, Fail, Inconclusive };

struct VerifyItem {
    std::string anchor;    // stable semantic name of the reproduced result
    std::string command;   // what was computed
    std::string expected;
    std::string actual;
    VerifyStatus status = VerifyStatus::Inconclusive;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerifyItem> items;
    std::string toolchain = kToolchainStamp;

    int failed() const;
    int inconclusive() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Names of the registered checks, in registration order.
std::vector<std::string> verify_anchors();

/**
 * Runs every registered reproduction check whose anchor contains `filter`
 * (all of them when the filter is empty), up to `jobs` concurrently, results
 * merged in registration order. Throws std::invalid_argument when the filter
 * matches nothing. Inconclusive items do not fail the run.
 */
VerificationReport run_verify_paper(const std::string& filter = "",
                                    uint64_t seed = 0, int jobs = 1);

}  // namespace ivp
