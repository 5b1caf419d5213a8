#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncl/entanglement.hpp"

namespace ncl::cli {

enum ExitCode : int {
    kOk = 0,
    kBadArguments = 1,
    kUnphysical = 2,
    kNotConverged = 3,
    kOracleMismatch = 4,
};

/// Flat JSON object keyed by the NonclassicalityReport field names.
nlohmann::ordered_json to_json(const NonclassicalityReport& report);

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncl::cli
