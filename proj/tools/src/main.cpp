#include "crystal_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return crystal::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
