#pragma once

#include <stdexcept>
#include <string>

namespace pinnacle {

// malformed or out-of-contract input; the CLI maps this to exit code 2
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// a size guard refused to run (exhaustive enumeration would be unreasonable);
// the CLI maps this to exit code 3
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pinnacle
