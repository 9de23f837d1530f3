#include <iostream>

#include "tenfold/acceptance.hpp"

int main() {
  std::vector<tenfold::acceptance::CriterionResult> results =
      tenfold::acceptance::run_criteria(20250825, &std::cout);
  bool all = true;
  for (const tenfold::acceptance::CriterionResult& r : results) all = all && r.pass;
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: criteria failed")
            << std::endl;
  return all ? 0 : 1;
}
