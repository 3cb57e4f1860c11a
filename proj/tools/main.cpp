#include <iostream>

#include "qxgcd/cli.hpp"

int main(int argc, char** argv) {
  return qxgcd::cli::run(argc, argv, std::cout, std::cerr);
}
