#include <iostream>

#include "pmeans/cli.hpp"

int main(int argc, char** argv) { return pmeans::run_cli(argc, argv, std::cout, std::cerr); }
