#include "checks.hpp"

#include <memory>

#include "declab/error.hpp"
#include "declab/kan.hpp"
#include "space.hpp"

namespace declab::cli {

namespace {

const std::vector<std::string> small_bispaces = {
    "dec_simplex(0)", "dec_simplex(1)", "dec_simplex(2)", "external(simplex(0), simplex(0))",
    "external(simplex(1), simplex(1))", "external(boundary(2), simplex(1))",
};

bool needs_space(const std::string& check) { return check != "split-uniqueness"; }

Entry header(const CheckSpec& spec) {
  Entry e;
  e.check = spec.check;
  if (needs_space(spec.check)) e.object = spec.space;
  e.bispace = spec.bispace;
  e.cutoff = spec.check == "unit-homology" ? spec.degree : spec.levels;
  return e;
}

Entry evaluate(const CheckSpec& spec) {
  Entry e = header(spec);
  const int n = spec.levels;
  CheckResult r;

  if (spec.check == "split-uniqueness") {
    r = check_split_uniqueness(n + 1);
  } else {
    const SSet x = parse_space(spec.space);
    if (spec.check == "split-fork") {
      for (int k = 2; k <= n + 1 && r.ok; ++k)
        for (int i = 0; i <= k - 1 && r.ok; ++i) {
          const auto fork = verify_split_fork(x, k, i);
          if (!fork.ok) r = CheckResult::fail(fork.witness);
        }
    } else if (spec.check == "pi0-ident") {
      r = check_pi0_identification(x, n);
    } else if (spec.check == "two-route-sigma") {
      if (spec.bispace.empty())
        r = check_two_routes(dec(x), n);
      else
        r = check_two_routes(std::make_shared<const BiSSet>(parse_bispace(spec.bispace)), n);
    } else if (spec.check == "counit") {
      r = check_counit(x, n);
    } else if (spec.check == "comparison") {
      r = check_comparison(x, n);
    } else if (spec.check == "unit-homology") {
      auto u = check_unit_homology(x, spec.degree);
      r = u.result;
      if (!u.source.empty()) e.homology = HomologyReport{u.source, u.target, u.maps};
    } else if (spec.check == "retraction") {
      r = verify_retraction(x, n);
    } else if (spec.check == "adjunction") {
      const auto ys = spec.bispace.empty() ? small_bispaces : std::vector<std::string>{spec.bispace};
      for (const auto& y : ys) {
        r = check_adjunction(parse_bispace(y), x);
        if (!r.ok) {
          r.message = y + ": " + r.message;
          break;
        }
      }
    }
  }
  e.status = r.ok ? Status::pass : Status::fail;
  e.message = r.message;
  e.witness = r.square;
  return e;
}

nlohmann::json integer(const Int& v) {
  const auto m = v.to_mpz();
  if (m.fits_slong_p()) return m.get_si();
  return v.to_string();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "split-uniqueness", "split-fork", "pi0-ident",  "two-route-sigma", "counit",
      "comparison",       "unit-homology", "retraction", "adjunction",
  };
  return names;
}

void validate(const CheckSpec& spec) {
  bool known = false;
  for (const auto& name : check_names()) known = known || name == spec.check;
  if (!known) throw PreconditionError("unknown check '" + spec.check + "'");
  if (spec.levels < 0 || spec.degree < 0) throw PreconditionError("cutoffs must be non-negative");
  if (needs_space(spec.check)) {
    if (spec.space.empty()) throw PreconditionError("check '" + spec.check + "' needs --space");
    parse_space(spec.space);
  }
  if (!spec.bispace.empty()) {
    if (spec.check != "two-route-sigma" && spec.check != "adjunction")
      throw PreconditionError("--bispace applies only to two-route-sigma and adjunction");
    parse_bispace(spec.bispace);
  }
}

Entry run(const CheckSpec& spec) {
  validate(spec);
  try {
    return evaluate(spec);
  } catch (const InconclusiveError& err) {
    Entry e = header(spec);
    e.status = Status::inconclusive;
    e.message = err.what();
    return e;
  }
}

nlohmann::json to_json(const std::vector<AbGroup>& groups) {
  auto out = nlohmann::json::array();
  for (std::size_t n = 0; n < groups.size(); ++n) {
    auto torsion = nlohmann::json::array();
    for (const auto& t : groups[n].torsion) torsion.push_back(integer(t));
    out.push_back({{"n", n}, {"rank", groups[n].rank}, {"torsion", torsion}});
  }
  return out;
}

std::string to_text(const std::vector<AbGroup>& groups) {
  std::string s = "(";
  for (std::size_t n = 0; n < groups.size(); ++n) s += (n ? ", " : "") + groups[n].to_string();
  return s + ")";
}

nlohmann::json to_json(const Entry& e) {
  nlohmann::json j = {
      {"check", e.check},
      {"object", e.object.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.object)},
      {"cutoff", e.cutoff},
      {"status", to_string(e.status)},
  };
  if (!e.bispace.empty()) j["bispace"] = e.bispace;
  if (!e.message.empty()) j["message"] = e.message;
  if (e.witness) {
    j["witness"] = {
        {"beta", to_flat(e.witness->beta)}, {"level", e.witness->level}, {"element", e.witness->element},
        {"lhs", e.witness->lhs},           {"rhs", e.witness->rhs},
    };
  }
  if (e.homology) {
    auto maps = nlohmann::json::array();
    for (const auto& m : e.homology->maps) {
      auto rows = nlohmann::json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m(r, c)));
        rows.push_back(row);
      }
      maps.push_back({{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}});
    }
    j["homology"] = {
        {"source", to_json(e.homology->source)},
        {"target", to_json(e.homology->target)},
        {"maps", maps},
    };
  }
  return j;
}

nlohmann::json report_json(const std::vector<Entry>& entries) {
  auto results = nlohmann::json::array();
  for (const auto& e : entries) results.push_back(to_json(e));
  return {{"version", 1}, {"results", results}};
}

std::string to_text(const Entry& e) {
  std::string s = to_string(e.status) + " " + e.check;
  if (!e.bispace.empty()) s += " " + e.bispace + " ->";
  if (!e.object.empty()) s += " " + e.object;
  s += (e.check == "unit-homology" ? " D=" : " N=") + std::to_string(e.cutoff);
  if (e.homology) {
    const auto& h = *e.homology;
    if (h.source == h.target)
      s += ": H_* = " + to_text(h.source) + " on both sides";
    else
      s += ": H_* = " + to_text(h.source) + " vs " + to_text(h.target);
  }
  if (!e.message.empty()) s += ": " + e.message;
  if (e.witness) s += " [" + e.witness->to_string() + "]";
  return s;
}

int exit_code(const std::vector<Entry>& entries) {
  bool inconclusive = false;
  for (const auto& e : entries) {
    if (e.status == Status::fail) return 1;
    inconclusive = inconclusive || e.status == Status::inconclusive;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace declab::cli
