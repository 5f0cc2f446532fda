#include <iostream>

#include "selfdesc_cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return selfdesc::cli::run(argc, argv, std::cout, std::cerr);
}
