#include <iostream>
#include <string>
#include <vector>

#include "pinnacle/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pinnacle::run_cli(args, std::cout, std::cerr);
}
