#include <iostream>
#include <string>
#include <vector>

#include "feqs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return feqs::cli_run(args, std::cout, std::cerr);
}
