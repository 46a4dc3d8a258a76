#include <iostream>

#include "coneham/cli.hpp"

int main(int argc, char** argv) {
  return coneham::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
