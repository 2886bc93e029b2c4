#include <iostream>
#include <string>
#include <vector>

#include "weylforge/cli.hpp"

int main(int argc, char** argv)
{
    return weylforge::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                               std::cerr);
}
