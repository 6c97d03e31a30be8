#include <iostream>

#include "cfcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cfcalc::cli::run(args, std::cout, std::cerr);
}
