#pragma once

// The acceptance matrix: eight criteria over a fixed corpus, exact equalities
// throughout, each with a wall-clock budget.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace declab::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = true;
  std::string detail;
  double seconds = 0;
  double budget = 0;
};

// Builder expressions of the corpus.
const std::vector<std::string>& acceptance_corpus();

// Runs criterion id (1..8).
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

std::string to_text(const CriterionResult& r);
// Without timings, so that reports are reproducible.
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace declab::cli
