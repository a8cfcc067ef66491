#pragma once

// Levelwise-finite presheaves on the simplex category, seen through their
// elements: level n is the index range [0, size(n)) and structure maps act on
// indices. Cell-presented simplicial sets, décalage, left Kan extensions,
// total simplicial sets and cotensors all implement these interfaces, so the
// generic checks below (naturality, pi_0, split forks, chains) apply to all of
// them.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "declab/ordinal.hpp"

namespace declab {

using Elem = std::uint32_t;

class SimplicialObject {
 public:
  virtual ~SimplicialObject() = default;

  virtual std::size_t size(int n) const = 0;
  // beta : [m] -> [n] sends x in level n to an element of level m.
  virtual Elem act(const OrdinalMap& beta, Elem x) const = 0;

  // d_i : X_n -> X_{n-1}
  Elem face(int n, int i, Elem x) const { return act(coface(n, i), x); }
  // s_i : X_n -> X_{n+1}
  Elem degeneracy(int n, int i, Elem x) const { return act(codegeneracy(n, i), x); }
  // x is degenerate iff x = s_i d_i x for some i.
  virtual bool is_degenerate(int n, Elem x) const;
};

class BisimplicialObject {
 public:
  virtual ~BisimplicialObject() = default;

  virtual std::size_t size(int k, int l) const = 0;
  // (horizontal, vertical) : ([k'], [l']) -> ([k], [l]).
  virtual Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const = 0;
};

// Presheaves on the augmented simplex category: levels start at -1 and maps
// may have empty domain.
class AugmentedSimplicialObject {
 public:
  virtual ~AugmentedSimplicialObject() = default;

  virtual std::size_t size(int n) const = 0;
  virtual Elem act(const OrdinalMap& beta, Elem x) const = 0;

  // The structure map X_0 -> X_{-1}.
  std::vector<Elem> augmentation() const;
  // True iff the augmentation coequalizes d_0, d_1 : X_1 -> X_0.
  bool augmentation_coequalizes() const;
};

class AugmentedBisimplicialObject {
 public:
  virtual ~AugmentedBisimplicialObject() = default;

  virtual std::size_t size(int k, int l) const = 0;
  virtual Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const = 0;
};

// Restriction of an augmented object to the simplex category.
class AugmentationForgotten final : public SimplicialObject {
 public:
  explicit AugmentationForgotten(std::shared_ptr<const AugmentedSimplicialObject> base)
      : base_(std::move(base)) {}

  std::size_t size(int n) const override { return base_->size(n); }
  Elem act(const OrdinalMap& beta, Elem x) const override { return base_->act(beta, x); }

 private:
  std::shared_ptr<const AugmentedSimplicialObject> base_;
};

// A quotient of the finite set {0, ..., n-1}. Classes are ordered by their
// least element and each class lists its members in increasing order, so the
// representative of a class is its least element.
struct FinSetQuot {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Elem>> classes;

  std::size_t element_count() const { return class_of.size(); }
  std::size_t class_count() const { return classes.size(); }
  Elem representative(std::size_t c) const { return classes[c].front(); }

  bool operator==(const FinSetQuot&) const = default;
};

// The quotient of {0, ..., n-1} by the equivalence relation generated by the
// given pairs.
FinSetQuot coequalizer(std::size_t n, const std::vector<std::pair<Elem, Elem>>& relations);

// Coequalizer of d_0, d_1 : X_1 -> X_0.
FinSetQuot pi0(const SimplicialObject& x);

// The map of components induced by f_0 : X_0 -> Y_0. Throws ValidationError if
// f_0 does not respect the partitions.
std::vector<Elem> induced_on_pi0(const FinSetQuot& source, const FinSetQuot& target,
                                 const std::vector<Elem>& level_zero_map);

// A levelwise map between simplicial objects, given as an index table per level.
struct LevelwiseMap {
  std::vector<std::vector<Elem>> levels;

  Elem operator()(int n, Elem x) const { return levels[static_cast<std::size_t>(n)][x]; }
};

// A failing naturality square: f(act_A(beta, x)) != act_B(beta, f(x)).
struct SquareFailure {
  OrdinalMap beta;
  int level = 0;
  Elem element = 0;
  Elem lhs = 0;
  Elem rhs = 0;

  std::string to_string() const;
};

enum class Operators {
  generators,  // cofaces and codegeneracies between levels <= cutoff
  all,         // every monotone map between levels <= cutoff
};

std::vector<OrdinalMap> operators_up_to(int cutoff, Operators which);

std::optional<SquareFailure> check_naturality(const SimplicialObject& a, const SimplicialObject& b,
                                              const LevelwiseMap& f, int cutoff,
                                              Operators which = Operators::generators);

bool is_bijection(const std::vector<Elem>& f, std::size_t target_size);

// Outcome of a finite verification. A failing naturality square is kept in
// structured form for reports.
struct CheckResult {
  bool ok = true;
  std::string message;
  std::optional<SquareFailure> square;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string message) { return CheckResult{false, std::move(message), std::nullopt}; }
  static CheckResult fail(std::string message, SquareFailure square) {
    return CheckResult{false, std::move(message), std::move(square)};
  }
};

// The first failure among several checks, in order.
CheckResult first_failure(std::initializer_list<CheckResult> results);

// Naturality of f as a CheckResult, naming the map.
CheckResult natural(const std::string& name, const SimplicialObject& a, const SimplicialObject& b,
                    const LevelwiseMap& f, int cutoff, Operators which = Operators::generators);

// The simplicial identities among faces and degeneracies on levels <= cutoff.
CheckResult check_simplicial_identities(const SimplicialObject& x, int cutoff);

// The split fork X_k => X_{k-1} -> X_{k-2} formed by d_i, d_{i+1} and d_i,
// together with its splittings by degeneracies.
struct SplitForkResult {
  bool ok = true;
  std::string witness;
};

SplitForkResult verify_split_fork(const SimplicialObject& x, int k, int i);

}  // namespace declab
