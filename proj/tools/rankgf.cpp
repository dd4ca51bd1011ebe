#include <iostream>
#include <string>
#include <vector>

#include "rankgf/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return rankgf::cli::run(args, std::cout, std::cerr);
}
