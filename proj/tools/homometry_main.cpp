#include <iostream>
#include <string>
#include <vector>

#include "homometry/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return homometry::cli::run(args, std::cout, std::cerr);
}
