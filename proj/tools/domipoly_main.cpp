#include <iostream>
#include <string>
#include <vector>

#include "domipoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return domipoly::cli_run(args, std::cout, std::cerr);
}
