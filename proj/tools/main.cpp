#include <iostream>

#include "bctkit/cli.hpp"

int main(int argc, char** argv) {
  return bctkit::run_cli(argc, argv, std::cout, std::cerr);
}
