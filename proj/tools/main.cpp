#include <iostream>

#include "geoclique/cli.hpp"

int main(int argc, char** argv) {
    return geoclique::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
