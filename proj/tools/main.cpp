#include <iostream>

#include "knotproj/cli.hpp"

int main(int argc, char** argv) {
    return knotproj::cli_main(argc, argv, std::cout, std::cerr);
}
