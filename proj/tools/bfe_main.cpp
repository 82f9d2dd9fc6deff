#include <string>
#include <vector>

#include "bfe/runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bfe::run_cli(args);
}
