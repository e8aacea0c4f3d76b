#include <iostream>
#include <string>
#include <vector>

#include "nalg/cli_core.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nalg::cli::run(std::move(args), std::cout, std::cerr);
}
