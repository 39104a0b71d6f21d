#include <iostream>

#include "plethora/cli.hpp"

int main(int argc, char** argv) {
  return plethora::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
