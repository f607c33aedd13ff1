#include <iostream>
#include <string>
#include <vector>

#include "nsl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return nsl::cli::main_entry(args, std::cout, std::cerr);
}
