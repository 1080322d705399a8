#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eliminant/resultant.hpp"

namespace eliminant {

// Parsed script: one ring declaration, bindings, and a final bare command.
// Right-hand sides are kept as canonically spaced token strings so that
// print/parse round-trips are exact.
struct ScriptStatement {
    std::string name;  // empty for the trailing command statement
    std::string rhs;
    bool operator==(const ScriptStatement&) const = default;
};

struct Script {
    std::string domain;               // "ZZ", "QQ", or "GF(p)"
    std::vector<std::string> params;  // at most one coefficient-parameter block
    std::vector<std::string> vars;
    std::vector<ScriptStatement> statements;
    bool operator==(const Script&) const = default;
};

Script parse_script(const std::string& text);
std::string print_script(const Script& s);

struct RunFlags {
    ResultantAlgorithm algorithm = ResultantAlgorithm::Auto;
    std::uint64_t seed = 0;
    bool timing = false;
    int threads = 1;
};

struct RunResult {
    std::string command;
    std::vector<std::string> inputs;  // canonical echo of the arguments
    std::vector<std::string> result;  // canonical result lines
    std::string algorithm;
    int coordinate_changes = 0;
    std::uint64_t seed = 0;
    long long elapsed_ms = 0;
};

// Executes the script's trailing command; throws Error on failure.
RunResult run_script(const Script& s, const RunFlags& flags);

std::string render_text(const RunResult& r, bool timing);
std::string render_json(const RunResult& r);
// {"error": {"code", "message"}} document matching the output schema
std::string render_error_json(const std::string& code, const std::string& message);

}  // namespace eliminant
