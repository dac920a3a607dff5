#include <iostream>

#include "ecs/cli.hpp"

int main(int argc, char** argv) { return rext::cli::run(argc, argv, std::cout, std::cerr); }
