#pragma once

// Named checks over builder expressions, and their reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "declab/homology.hpp"
#include "declab/simplicial.hpp"

namespace declab::cli {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct CheckSpec {
  std::string check;
  std::string space;    // empty for split-uniqueness
  std::string bispace;  // optional for two-route-sigma and adjunction
  int levels = 4;
  int degree = 2;
};

struct HomologyReport {
  std::vector<AbGroup> source;
  std::vector<AbGroup> target;
  std::vector<MatrixZ> maps;
};

struct Entry {
  std::string check;
  std::string object;
  std::string bispace;
  int cutoff = 0;
  Status status = Status::pass;
  std::string message;
  std::optional<SquareFailure> witness;
  std::optional<HomologyReport> homology;
};

const std::vector<std::string>& check_names();

// Throws ParseError or ValidationError for a bad expression and
// PreconditionError for an unknown check or a negative cutoff.
Entry run(const CheckSpec& spec);

// Builds the space first, so that expression errors surface before any check.
void validate(const CheckSpec& spec);

nlohmann::json to_json(const Entry& e);
nlohmann::json report_json(const std::vector<Entry>& entries);
std::string to_text(const Entry& e);

// 1 if any entry failed, otherwise 2 if any was inconclusive, otherwise 0.
int exit_code(const std::vector<Entry>& entries);

nlohmann::json to_json(const std::vector<AbGroup>& groups);
std::string to_text(const std::vector<AbGroup>& groups);

}  // namespace declab::cli
