#include <iostream>

#include "qlimits_cli/app.hpp"

int main(int argc, char** argv) {
  return qlimits::cli::run(argc, argv, std::cout, std::cerr);
}
