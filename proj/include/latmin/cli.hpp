#pragma once

#include <string>
#include <vector>

namespace latmin {

struct CliResult {
    int exit_code = 0;
    std::string out; // newline-terminated JSON
};

/// latmin <command> [--in FILE | --inline JSON] [--mode M] [--vertex a,b,...]
///        [--suite S --seed N --count N --dim D --bound B] [--out FILE]
///
/// Exit 0 on success, 1 when a verification reports a violation, 2 on
/// usage, input or I/O errors (with {"error": {...}} as output).
CliResult run(const std::vector<std::string>& argv);

} // namespace latmin
