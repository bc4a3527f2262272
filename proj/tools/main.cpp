#include <iostream>

#include "partint/cli.hpp"

int main(int argc, char** argv)
{
    return partint::run_cli(argc, argv, std::cout, std::cerr);
}
