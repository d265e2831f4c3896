#include <vector>

#include "clfbench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clfbench::cli::run(args);
}
