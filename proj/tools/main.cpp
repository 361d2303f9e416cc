#include <iostream>

#include "polycert/cli.hpp"

int main(int argc, char** argv) { return polycert::cli::run(argc, argv, std::cout, std::cerr); }
