#pragma once

#include <string>
#include <vector>

#include "swr/scenario.hpp"

namespace swr {

// Named golden scenarios with expected outcomes, stored as JSON data files
// (one file per replay) so they double as format documentation.

struct ReplayAssertionResult {
    std::string description;
    bool passed = false;
    std::string detail; // expected vs got, on failure
};

struct ReplayReport {
    std::string name;
    std::string note;
    std::vector<ReplayAssertionResult> results;

    bool passed() const {
        for (const auto& r : results)
            if (!r.passed)
                return false;
        return !results.empty();
    }
};

// Names available in the given registry directory, sorted.
std::vector<std::string> list_replays(const std::string& dir);

// Loads <dir>/<name>.json and executes its assertions. Throws UnknownReplay
// if the file does not exist, ParseError on malformed content.
ReplayReport run_replay(const std::string& dir, const std::string& name);

} // namespace swr
