#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    auto result = revform::cli::run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
