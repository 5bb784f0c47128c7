#include "trisect/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return trisect::cli::run_cli(argc, argv, std::cout, std::cerr); }
