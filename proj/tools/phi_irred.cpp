#include <cstdio>
#include <iostream>

#include "phiirred/cli.hpp"

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    return phiirred::run_cli(argc, argv, std::cout, std::cerr);
}
