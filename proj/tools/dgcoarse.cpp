#include <iostream>

#include "dgc/cli.hpp"

int main(int argc, char** argv) {
    return dgc::run_cli(argc, argv, std::cout, std::cerr);
}
