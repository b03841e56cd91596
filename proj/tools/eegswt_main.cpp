#include <iostream>
#include <string>
#include <vector>

#include "eegswt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eegswt::dispatch(args, std::cout, std::cerr);
}
