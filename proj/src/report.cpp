#include "torlim/report.hpp"

#include <sstream>

namespace torlim {

Report::Report(std::string command, std::uint64_t seed)
    : command_(std::move(command)), seed_(seed), outputs_(nlohmann::json::object()) {}

void Report::set_inputs_digest(std::uint64_t digest) {
    std::ostringstream out;
    out << "fnv1a:" << std::hex << digest;
    inputs_digest_ = out.str();
}

void Report::add_output(const std::string& key, const nlohmann::json& value) { outputs_[key] = value; }

void Report::add_check(const std::string& name, bool passed, const std::string& detail) {
    checks_.push_back({name, passed, detail});
}

bool Report::all_checks_passed() const {
    for (const Check& c : checks_)
        if (!c.passed) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::json body;
    body["command"] = command_;
    body["seed"] = seed_;
    body["inputs_digest"] = inputs_digest_;
    body["outputs"] = outputs_;
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : checks_) {
        nlohmann::json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    body["checks"] = checks;
    return body.dump(2) + "\n";
}

namespace {

void render_value(std::ostream& out, const nlohmann::json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << pad << it.key() << ":\n";
                render_value(out, it.value(), indent + 2);
            } else {
                out << pad << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>()
                                                                          : it.value().dump())
                    << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                render_value(out, item, indent + 2);
            } else {
                out << pad << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        }
    } else {
        out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    out << "command: " << command_ << "\n";
    out << "seed: " << seed_ << "\n";
    out << "inputs_digest: " << inputs_digest_ << "\n";
    render_value(out, outputs_, 0);
    for (const Check& c : checks_) {
        out << (c.passed ? "[ok] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    return out.str();
}

}  // namespace torlim
