#include "arctan_cert/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return arctan_cert::cli::run(argc, argv, std::cout, std::cerr);
}
