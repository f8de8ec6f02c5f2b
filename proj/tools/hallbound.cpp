#include <iostream>

#include "hallbound/cli.hpp"

int main(int argc, char** argv) {
  return hallbound::run_cli(argc, argv, std::cout, std::cerr);
}
