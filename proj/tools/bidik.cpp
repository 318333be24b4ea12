#include <iostream>
#include <string>
#include <vector>

#include "bidik/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bidik::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
