#include <iostream>
#include <string>
#include <vector>

#include "resolvent/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return resolvent::run_cli(args, std::cout, std::cerr);
}
