#include <iostream>

#include "fano/cli.hpp"

int main(int argc, char** argv) { return fano::run_cli(argc, argv, std::cout, std::cerr); }
