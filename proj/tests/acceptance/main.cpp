#include <cstdlib>
#include <iostream>
#include <string>

#include "checks/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (const auto& r : handlecalc::acceptance::run_acceptance(seed)) {
    std::cout << handlecalc::acceptance::format_line(r) << '\n';
    all = all && r.passed();
  }
  return all ? 0 : 1;
}
