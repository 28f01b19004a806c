// Runs the acceptance suite and prints one pass/fail line per criterion.

#include <cstdlib>
#include <iostream>

#include "padiclab/acceptance.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 1;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  size_t cap = 256;
  if (const char* env = std::getenv("PADIC_LAB_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) cap = (size_t)v;
  }
  auto report = padiclab::run_acceptance(seed, cap, &std::cout);
  if (!report.all_pass) {
    std::cout << "acceptance: FAILED" << std::endl;
    return 1;
  }
  std::cout << "acceptance: all criteria pass" << std::endl;
  return 0;
}
