#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kmergraph::cli {

struct RunConfig {
    std::string command;  // validate, count, lcs, dbg, gadget-build, gadget-solve, unfold, count-layered, selftest
    std::vector<std::string> inputs;
    std::size_t k = 0;
    std::string algorithm = "dp";
    std::optional<std::size_t> oracle_cap;
    std::string output;  // empty: stdout
    int verbosity = 0;
    bool per_vertex = false;
    bool json_errors = false;

    // dbg
    std::string export_path;
    std::optional<std::string> query;
    std::optional<std::pair<std::string, std::string>> walk;

    // selftest
    std::uint64_t seed = 1;
    std::size_t instances = 60;
};

/// Runs one command and returns the process exit status: 0 success,
/// 1 validation or format failure, 2 resource cap, 3 internal consistency.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Parse failures exit with status 1.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmergraph::cli
