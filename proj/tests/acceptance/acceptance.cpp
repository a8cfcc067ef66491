#include <iostream>

#include "acceptance.hpp"

int main() {
  bool ok = true;
  declab::cli::run_acceptance([&](const declab::cli::CriterionResult& r) {
    std::cout << declab::cli::to_text(r) << std::endl;
    ok = ok && r.ok;
  });
  std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
