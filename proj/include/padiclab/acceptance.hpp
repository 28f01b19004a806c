#ifndef PADICLAB_ACCEPTANCE_HPP
#define PADICLAB_ACCEPTANCE_HPP

// The acceptance suite: one entry per criterion, runnable from the test
// binary and from the `selftest` command.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace padiclab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

// `progress`, when set, receives one "[ k/10] name ... PASS/FAIL" line per
// criterion as it finishes.
AcceptanceReport run_acceptance(uint64_t seed = 1, size_t dim_cap = 256,
                                std::ostream* progress = nullptr);

}  // namespace padiclab

#endif
