#include <iostream>

#include "k3mirror/cli.hpp"

int main(int argc, char** argv)
{
    return k3mirror::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
