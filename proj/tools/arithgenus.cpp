#include <iostream>
#include <string>
#include <vector>

#include "arithgenus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arithgenus::cli::run(args, std::cin, std::cout, std::cerr);
}
