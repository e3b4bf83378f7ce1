#include <iostream>

#include "commands.hpp"

int main(int argc, char **argv) {
    return grover_phase::cli::run(argc, argv, std::cout, std::cerr);
}
