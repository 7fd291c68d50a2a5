// Runs each verification suite once and prints a verdict per instance.
#include <iostream>

#include "vrhom/suites.hpp"

int main() {
  vrhom::SuiteOptions opt;
  opt.trials = 20;
  int failures = 0;
  for (const auto& suite : vrhom::suite_names()) {
    for (const auto& v : vrhom::run_suite(suite, opt)) {
      std::cout << (v.pass ? "pass  " : "FAIL  ") << v.axiom << "  " << v.instance << '\n';
      for (const auto& w : v.witness) std::cout << "      " << w << '\n';
      failures += v.pass ? 0 : 1;
    }
  }
  return failures == 0 ? 0 : 1;
}
