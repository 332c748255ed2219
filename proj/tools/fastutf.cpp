#include <iostream>

#include "fastutf/cli.hpp"

int main(int argc, char** argv) { return fastutf::cli::run(argc, argv, std::cout, std::cerr); }
