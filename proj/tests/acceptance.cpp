// Runs every acceptance criterion, including the slow one, and prints one line per criterion.

#include <iostream>

#include "vhess/regression.hpp"

int main() {
  vhess::SuiteOptions opts;
  opts.include_slow = true;
  const auto results = vhess::run_acceptance(opts);
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
  }
  return vhess::all_passed(results) ? 0 : 1;
}
