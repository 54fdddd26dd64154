#include <iostream>

#include "forge_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return novikov::forge::run(args, std::cout, std::cerr);
}
