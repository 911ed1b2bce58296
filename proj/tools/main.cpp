#include <iostream>

#include "starforest/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return starforest::run_cli(args, std::cin, std::cout, std::cerr);
}
