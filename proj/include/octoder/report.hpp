#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace octoder {

using Json = nlohmann::ordered_json;

/// One named verification step with its outcome and structured details
/// (dimensions, ranks, matrices as arrays of exact entry strings).
struct CheckResult {
    std::string name;
    bool pass = false;
    Json details = Json::object();
};

/// Outcome of one command invocation. Serialization is deterministic:
/// identical inputs produce byte-identical JSON, so the elapsed time appears
/// only in the text rendering.
struct Report {
    std::string command;
    std::string algebra;
    std::string field;
    std::string digest;
    std::vector<CheckResult> checks;
    /// Informational commands report computed values without asserting them,
    /// so their exit code ignores the per-check pass flags.
    bool informational = false;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }

    [[nodiscard]] int exit_code() const { return informational || pass() ? 0 : 1; }

    [[nodiscard]] Json to_json() const {
        Json doc{{"command", command},
                 {"algebra", algebra},
                 {"field", field},
                 {"digest", digest},
                 {"checks", Json::array()}};
        for (const CheckResult& c : checks) {
            Json entry{{"name", c.name}, {"pass", c.pass}};
            for (const auto& [key, value] : c.details.items()) entry[key] = value;
            doc["checks"].push_back(std::move(entry));
        }
        doc["pass"] = pass();
        return doc;
    }

    [[nodiscard]] std::string to_text() const {
        std::string out;
        out += "command: " + command + "\n";
        out += "algebra: " + algebra + "\n";
        out += "field: " + field + "\n";
        out += "digest: " + digest + "\n";
        for (const CheckResult& c : checks) {
            out += c.pass ? "  [pass] " : "  [FAIL] ";
            out += c.name;
            std::string inline_details;
            std::string blocks;
            for (const auto& [key, value] : c.details.items()) {
                if (value.is_array()) {
                    blocks += render_matrix_block(key, value);
                } else {
                    inline_details += inline_details.empty() ? " (" : ", ";
                    inline_details +=
                        key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
                }
            }
            if (!inline_details.empty()) inline_details += ")";
            out += inline_details + "\n" + blocks;
        }
        out += std::string("result: ") + (pass() ? "pass" : "FAIL") +
               (informational ? " (informational)" : "") + "\n";
        out += "elapsed: " + std::to_string(elapsed_seconds) + " s\n";
        return out;
    }

  private:
    /// Renders an array detail: a matrix (array of rows of entry strings)
    /// becomes an indented block, an array of matrices becomes several.
    [[nodiscard]] static std::string render_matrix_block(const std::string& key,
                                                         const Json& value) {
        std::string out;
        if (!value.empty() && value.front().is_array() && !value.front().empty() &&
            value.front().front().is_array()) {
            for (std::size_t t = 0; t < value.size(); ++t)
                out += render_matrix_block(key + "[" + std::to_string(t) + "]", value[t]);
            return out;
        }
        out += "    " + key + ":\n";
        for (const Json& row : value) {
            out += "     ";
            if (row.is_array())
                for (const Json& cell : row)
                    out += " " + (cell.is_string() ? cell.get<std::string>() : cell.dump());
            else
                out += " " + (row.is_string() ? row.get<std::string>() : row.dump());
            out += "\n";
        }
        return out;
    }
};

} // namespace octoder
