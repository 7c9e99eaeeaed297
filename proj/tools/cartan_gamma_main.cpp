#include <iostream>

#include "cartan_gamma/cli.hpp"

int main(int argc, char** argv) { return cartan_gamma::cli::run(argc, argv, std::cout, std::cerr); }
