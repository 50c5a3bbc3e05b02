#include "ternmin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ternmin::cli::run(argc, argv, std::cout, std::cerr); }
