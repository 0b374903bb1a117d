#include <iostream>

#include "cuntzsim/cli.hpp"

int main(int argc, char** argv) { return cuntzsim::cli::run(argc, argv, std::cout, std::cerr); }
