#include <iostream>
#include <string>
#include <vector>

#include "traceid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return traceid::run(args, std::cout, std::cerr);
}
