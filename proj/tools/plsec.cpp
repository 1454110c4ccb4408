#include <iostream>

#include "plsec/cli.hpp"

int main(int argc, char** argv) { return plsec::cli::run(argc, argv, std::cout, std::cerr); }
