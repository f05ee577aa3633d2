#pragma once

#include <string>
#include <vector>

namespace sensnet {

// Entry point behind the command-line binary, exposed for in-process tests.
// Returns 0 on success, 1 on a usage or parameter error, 2 when a study
// refuses its parameters.
int cli_main(const std::vector<std::string>& args);

}  // namespace sensnet
