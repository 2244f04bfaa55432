#include "aco/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return aco::cli::run(argc, argv, std::cout, std::cerr);
}
