#include <iostream>

#include "s1d/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= 9; ++id) {
    const auto r = s1d::run_criterion(id);
    std::cout << s1d::format_result(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
