#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "checks.hpp"
#include "declab/error.hpp"
#include "declab/sset.hpp"
#include "space.hpp"

namespace {

int emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "declab: cannot write " << out_file << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace declab::cli;

  CLI::App app{"Finite checks of the decalage adjunctions"};
  app.require_subcommand(1);

  std::vector<std::string> names;
  CheckSpec spec;
  bool json = false;
  std::string out_file;

  auto* check = app.add_subcommand("check", "Run named checks on a space");
  check->add_option("names", names, "Checks to run")->required()->check(CLI::IsMember(check_names()));
  check->add_option("--space", spec.space, "Builder expression, e.g. \"quotient(simplex(1), boundary(1))\"");
  check->add_option("--bispace", spec.bispace, "Bisimplicial source for two-route-sigma or adjunction");
  check->add_option("--levels,-N", spec.levels, "Level cutoff")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_option("--degree,-D", spec.degree, "Homology degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_flag("--json", json, "Emit a JSON report");
  check->add_option("--out", out_file, "Write the report to a file");

  std::string print_space;
  auto* print = app.add_subcommand("print", "Print a space in the SSET v1 format");
  print->add_option("--space", print_space, "Builder expression")->required();

  auto* suite = app.add_subcommand("suite", "Run a check suite");
  std::string suite_name;
  suite->add_option("name", suite_name, "Suite name")->required()->check(CLI::IsMember({"acceptance"}));
  suite->add_flag("--json", json, "Emit a JSON report");
  suite->add_option("--out", out_file, "Write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*print) {
      std::cout << declab::print_sset(parse_space(print_space));
      return 0;
    }

    if (*suite) {
      const auto results = run_acceptance([&](const CriterionResult& r) {
        if (!json) std::cout << to_text(r) << std::endl;
      });
      bool ok = true;
      for (const auto& r : results) ok = ok && r.ok;
      if (json && emit(to_json(results).dump(2) + "\n", out_file)) return 1;
      return ok ? 0 : 1;
    }

    std::vector<Entry> entries;
    for (const auto& name : names) {
      CheckSpec s = spec;
      s.check = name;
      validate(s);
    }
    for (const auto& name : names) {
      CheckSpec s = spec;
      s.check = name;
      entries.push_back(run(s));
    }
    std::string text;
    if (json) {
      text = report_json(entries).dump(2) + "\n";
    } else {
      for (const auto& e : entries) text += to_text(e) + "\n";
    }
    if (emit(text, out_file)) return 1;
    return exit_code(entries);
  } catch (const declab::Error& e) {
    std::cerr << "declab: " << e.what() << "\n";
    return 1;
  }
}
