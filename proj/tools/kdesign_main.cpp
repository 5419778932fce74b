#include <iostream>

#include "kdesign/cli.hpp"

int main(int argc, char** argv) {
    return kdesign::run_cli(argc, argv, std::cout, std::cerr);
}
