#include <iostream>

#include "ekrlab/cli.hpp"

int main(int argc, char** argv) { return ekrlab::cli::run(argc, argv, std::cout, std::cerr); }
