#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ambig::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one `ambig` invocation. `args` excludes the program name. Returns the
/// exit status: 0 on success, 1 on domain errors, 2 on usage, parse or I/O
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ambig::cli
