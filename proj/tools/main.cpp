#include <iostream>

#include "nakayama/cli.hpp"

int main(int argc, char** argv) {
    return nakayama::run_cli(argc, argv, std::cout, std::cerr);
}
