#include <iostream>

#include "branchkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return branchkit::run_command(args, std::cout, std::cerr);
}
