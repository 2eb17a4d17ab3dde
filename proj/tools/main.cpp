#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hallinv::cli::run(argc, argv, std::cout, std::cerr);
}
