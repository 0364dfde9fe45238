#pragma once

// Command line front end; see cli::run.

#include <string>
#include <vector>

namespace symtriad::cli {

int run(const std::vector<std::string>& args);

}  // namespace symtriad::cli

#include "symtriad/cli_impl.hpp"
