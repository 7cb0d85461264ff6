#include <iostream>
#include <vector>

#include "ramlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ramlab::run_command(args, std::cout, std::cerr);
}
