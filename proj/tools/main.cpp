#include <iostream>
#include <string>
#include <vector>

#include "tempered/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tempered::run(args, std::cout, std::cerr);
}
