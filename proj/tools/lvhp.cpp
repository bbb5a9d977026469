#include <iostream>
#include <string>
#include <vector>

#include "lvhp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return lvhp::cli::run(args, std::cout, std::cerr);
}
