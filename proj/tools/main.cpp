#include <iostream>

#include "setmosaic/cli.hpp"

int main(int argc, char** argv) {
  return setmosaic::cli::run(argc, argv, std::cout, std::cerr);
}
