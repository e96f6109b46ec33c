#include <iostream>

#include "wada/cli.hpp"

int main(int argc, char** argv) { return wada::cli::run(argc, argv, std::cout, std::cerr); }
