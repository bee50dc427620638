#pragma once

#include <string>
#include <vector>

namespace revform::cli {

// 0: the property holds or the object was produced
// 1: the property fails (e.g. an encounter where avoidance was claimed)
// 2: usage or input error
struct CommandResult {
    int exit_code = 0;
    std::string out;  // JSON document (or formula text for `phi`)
    std::string err;  // diagnostics
};

// argv[0] is the program name.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace revform::cli
