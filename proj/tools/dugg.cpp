#include <iostream>

#include "dugg/cli.hpp"

int main(int argc, char** argv) { return dugg::run_cli(argc, argv, std::cout, std::cerr); }
