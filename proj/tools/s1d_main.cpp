#include "s1d/cli.hpp"

int main(int argc, char** argv) {
  return s1d::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
