#include <iostream>

#include "regiongray/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return regiongray::run(args, std::cout, std::cerr);
}
