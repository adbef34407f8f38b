#include <iostream>

#include "redword/cli.hpp"

int main(int argc, char** argv) { return redword::cli::run(argc, argv, std::cout, std::cerr); }
