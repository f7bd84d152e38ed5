#include <iostream>
#include <string>
#include <vector>

#include "finpart/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return finpart::cli::run(args, std::cout, std::cerr);
}
