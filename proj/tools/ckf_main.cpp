#include <iostream>

#include "ckf/cli.hpp"

int main(int argc, char** argv) { return ckf::cli::run(argc, argv, std::cout, std::cerr); }
