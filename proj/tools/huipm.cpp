#include <iostream>

#include "huipm/cli.hpp"

int main(int argc, char** argv) { return huipm::cli::run(argc, argv, std::cout, std::cerr); }
