#include <iostream>

#include "sdrep/cli.hpp"

int main(int argc, char** argv) {
  return sdrep::cli::run(argc, argv, std::cout, std::cerr);
}
