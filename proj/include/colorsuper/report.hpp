#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace colorsuper {

/// One named pass/fail entry; the detail must carry enough coordinates to
/// reproduce a failure (triple, pair, or matrix entry).
struct ReportCheck {
    std::string name;
    bool pass{false};
    std::string detail;
};

/// Deterministic run summary: identical inputs give byte-identical JSON.
/// No timestamps anywhere. Exit codes: 0 all-pass, 1 any failed check,
/// 2 usage or schema error.
struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();  // subcommand payload
    std::vector<ReportCheck> checks;
    std::vector<std::string> artifacts;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    int exit_code() const { return all_pass() ? 0 : 1; }

    nlohmann::json to_json() const {
        nlohmann::json jchecks = nlohmann::json::array();
        for (const auto& c : checks) {
            jchecks.push_back(nlohmann::json{
                {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
        }
        return nlohmann::json{{"command", command},
                              {"inputs", inputs},
                              {"result", result},
                              {"checks", jchecks},
                              {"artifacts", artifacts},
                              {"exit_code", exit_code()}};
    }
    std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace colorsuper
