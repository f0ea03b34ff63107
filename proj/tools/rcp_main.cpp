#include <iostream>

#include "rcp/cli.hpp"

int main(int argc, char** argv) { return rcp::cli::run(argc, argv, std::cout, std::cerr); }
