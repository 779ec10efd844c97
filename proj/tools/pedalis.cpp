#include <iostream>

#include "pedalis/cli.hpp"

int main(int argc, char** argv) { return pedalis::run_cli(argc, argv, std::cout, std::cerr); }
