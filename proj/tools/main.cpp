#include <iostream>
#include <string>
#include <vector>

#include "finfree/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return finfree::cli::run_cli(std::move(args), std::cout, std::cerr);
}
