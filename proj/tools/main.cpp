#include <iostream>

#include "evalg/cli.hpp"

int main(int argc, char** argv) {
    return evalg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
