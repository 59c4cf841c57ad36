#include <iostream>
#include <string>
#include <vector>

#include "kaw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kaw::run_cli(args, std::cout, std::cerr);
}
