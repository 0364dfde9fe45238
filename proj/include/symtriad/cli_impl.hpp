#pragma once

#include <iostream>

namespace symtriad::cli {

inline int run(const std::vector<std::string>& args) {
    (void)args;
    std::cerr << "symtriad: not yet wired\n";
    return 2;
}

}  // namespace symtriad::cli
