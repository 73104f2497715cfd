#include <iostream>

#include "cogrowth/cli.hpp"

int main(int argc, char** argv) {
  return cogrowth::run_cli(argc, argv, std::cout, std::cerr);
}
