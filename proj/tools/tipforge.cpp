#include <iostream>
#include <string>
#include <vector>

#include "tipforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tipforge::run_command(args, std::cout, std::cerr);
}
