#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace torlim {

// Deterministic command report. The body (text or JSON) is a pure function of
// the inputs and seed: timings and other run-dependent facts never enter it,
// so re-running a command reproduces the bytes exactly.
class Report {
public:
    Report(std::string command, std::uint64_t seed);

    void set_inputs_digest(std::uint64_t digest);
    void add_output(const std::string& key, const nlohmann::json& value);
    void add_check(const std::string& name, bool passed, const std::string& detail = "");

    bool all_checks_passed() const;

    std::string to_json() const;  // single JSON document, sorted keys, 2-space indent
    std::string to_text() const;

private:
    std::string command_;
    std::uint64_t seed_;
    std::string inputs_digest_;
    nlohmann::json outputs_;
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks_;
};

}  // namespace torlim
