#include <iostream>

#include "quintic/cli/commands.hpp"

int main(int argc, char** argv)
{
    return quintic::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
