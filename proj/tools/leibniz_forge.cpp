#include "leibniz/cli/dispatch.hpp"

#include <iostream>

int main(int argc, char **argv) { return leibniz::cli::run(argc, argv, std::cout, std::cerr); }
