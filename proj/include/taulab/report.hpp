#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace taulab {

struct CheckResult {
    std::string name;
    std::string params;
    std::string status; // pass | fail | skipped
    std::string lhs, rhs;
    std::string residual; // "0" for exact matches
    double elapsed = 0;   // seconds

    bool passed() const { return status == "pass"; }
};

struct VerificationReport {
    std::string version;
    std::string suite;
    uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;

    int count(const std::string& status) const;
    bool all_passed() const;

    std::string to_table() const;
    std::string to_json() const; // numbers serialized as strings
    std::string to_csv() const;
    std::string render(const std::string& format) const;
};

extern const char* kTaulabVersion;

} // namespace taulab
