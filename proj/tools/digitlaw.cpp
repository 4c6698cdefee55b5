#include "digitlaw/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return digitlaw::cli::execute(args, std::cin, std::cout, std::cerr).exit_code;
}
