#pragma once

#include "glsmx/model.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace glsmx::cli {

struct Truncations {
    int q_max = 6;
    int y_max = 6;
    int z_cap = 6;
};

// One JSON document: {"model": {...}, "truncations": {...}, "params": {...}}.
// Relative graph file paths resolve against `base_dir`.
struct RunConfig {
    GlsmModel model;
    Truncations trunc;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json echo;  // the document as read, after overrides
    std::string base_dir = ".";
};

// ConfigError on malformed input or non-positive caps.
RunConfig parse_config(const nlohmann::json& doc, const std::string& base_dir = ".");
nlohmann::json read_config_document(const std::string& path);

struct Check {
    std::string name;
    std::string status;  // pass, fail or skipped
    std::string first_failure;
};

struct Report {
    std::string command;
    nlohmann::json inputs;
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string>& commands();

// Library errors raised by the command end up as a failed "run" check.
Report run(const std::string& command, const RunConfig& config);

}  // namespace glsmx::cli
