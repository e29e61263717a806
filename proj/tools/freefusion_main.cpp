#include <iostream>
#include <string>
#include <vector>

#include "freefusion/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return freefusion::run_cli(args, std::cout, std::cerr);
}
