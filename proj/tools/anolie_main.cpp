#include <iostream>

#include "anolie/cli.hpp"

int main(int argc, char** argv) { return anolie::cli::run(argc, argv, std::cout, std::cerr); }
