#include <iostream>

#include "lagtor/cli.hpp"

int main(int argc, char** argv) {
  return lagtor::run_cli(argc, argv, std::cout, std::cerr);
}
