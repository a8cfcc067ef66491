#pragma once

// The ordinal sum sigma : Delta x Delta -> Delta and the functors around
// Dec = sigma^*: its left adjoint sigma_! (computed directly and through the
// augmented categories), its right adjoint T = sigma_* (by corepresentability),
// and the comparison maps between them.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "declab/bisset.hpp"
#include "declab/hom.hpp"
#include "declab/simplicial.hpp"
#include "declab/sset.hpp"

namespace declab {

// Every beta : [l] -> [k] with -1 <= l, k <= bound and every -1 <= i <= k has
// exactly one decomposition beta = first + second with first.cod() == [i],
// found by exhaustive search, and it is split_at(beta, i).
CheckResult check_split_uniqueness(int bound);

enum class Collapse {
  first,   // k |-> pi_0(Y_{-,k})
  second,  // k |-> pi_0(Y_{k,-})
};

// The components of the rows or columns of a bisimplicial object, as a
// simplicial object in the remaining index. Classes are numbered by least
// element.
class Components final : public SimplicialObject {
 public:
  Components(std::shared_ptr<const BisimplicialObject> y, Collapse collapse);

  std::size_t size(int k) const override { return quotient(k).class_count(); }
  Elem act(const OrdinalMap& beta, Elem c) const override;

  const FinSetQuot& quotient(int k) const;
  Elem class_of(int k, Elem y) const { return quotient(k).class_of[y]; }
  Elem representative(int k, Elem c) const { return quotient(k).representative(c); }

 private:
  std::shared_ptr<const BisimplicialObject> y_;
  Collapse collapse_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<FinSetQuot>> cache_;
};

// Position of an element of a summand-wise defined level.
struct Summand {
  int i = 0;
  Elem local = 0;
};

// sigma_! Y by the three-part formula
//   (sigma_! Y)_k = pi_0(Y_{-,k}) + Y_{0,k-1} + ... + Y_{k-1,0} + pi_0(Y_{k,-}),
// with the summands numbered i = -1, 0, ..., k.
class SigmaShriek final : public SimplicialObject {
 public:
  explicit SigmaShriek(std::shared_ptr<const BisimplicialObject> y);

  std::size_t size(int k) const override;
  Elem act(const OrdinalMap& beta, Elem x) const override;

  Summand locate(int k, Elem x) const;
  Elem element(int k, Summand s) const;
  std::size_t summand_size(int k, int i) const;

  const BisimplicialObject& source() const { return *y_; }
  const Components& first_components() const { return *first_; }
  const Components& second_components() const { return *second_; }

 private:
  std::shared_ptr<const BisimplicialObject> y_;
  std::shared_ptr<const Components> first_;
  std::shared_ptr<const Components> second_;
};

// iota_! X: X augmented by its components.
class AugmentedByComponents final : public AugmentedSimplicialObject {
 public:
  explicit AugmentedByComponents(std::shared_ptr<const SimplicialObject> x);

  std::size_t size(int n) const override;
  Elem act(const OrdinalMap& beta, Elem x) const override;

  const SimplicialObject& body() const { return *x_; }

 private:
  std::shared_ptr<const SimplicialObject> x_;
  FinSetQuot components_;
};

std::shared_ptr<const AugmentedByComponents> iota_shriek(std::shared_ptr<const SimplicialObject> x);

// Left Kan extension along the inclusion of the second index only:
// B_{i,-1} = pi_0(Y_{i,-}). Defined for first index i >= 0.
class AugmentSecond final : public AugmentedBisimplicialObject {
 public:
  explicit AugmentSecond(std::shared_ptr<const BisimplicialObject> y);

  std::size_t size(int i, int j) const override;
  Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const override;

 private:
  std::shared_ptr<const BisimplicialObject> y_;
  std::shared_ptr<const Components> rows_;
};

// Left Kan extension along the inclusion of the first index, applied to an
// object already augmented in the second: A_{-1,j} = pi_0(B_{-,j}).
class AugmentFirst final : public AugmentedBisimplicialObject {
 public:
  explicit AugmentFirst(std::shared_ptr<const AugmentedBisimplicialObject> b);

  std::size_t size(int i, int j) const override;
  Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const override;

  const FinSetQuot& column_quotient(int j) const;

 private:
  std::shared_ptr<const AugmentedBisimplicialObject> b_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<FinSetQuot>> cache_;
};

// (iota x iota)_! Y, computed in two stages.
std::shared_ptr<const AugmentFirst> iota2_shriek(std::shared_ptr<const BisimplicialObject> y);

// Each augmentation coequalizes its pair of faces and the two composites
// A_{0,0} -> A_{-1,-1} agree, for indices <= cutoff.
CheckResult check_augmentation_laws(const AugmentedBisimplicialObject& a, int cutoff);

// (sigma_a)_! A with ((sigma_a)_! A)_k = A_{-1,k} + A_{0,k-1} + ... + A_{k,-1},
// summands numbered i = -1, ..., k.
class SigmaAShriek final : public AugmentedSimplicialObject {
 public:
  explicit SigmaAShriek(std::shared_ptr<const AugmentedBisimplicialObject> a);

  std::size_t size(int k) const override;
  Elem act(const OrdinalMap& beta, Elem x) const override;

  Summand locate(int k, Elem x) const;
  Elem element(int k, Summand s) const;

 private:
  std::shared_ptr<const AugmentedBisimplicialObject> a_;
};

// iota^* (sigma_a)_! (iota x iota)_! Y, keeping the intermediate stages.
struct SigmaShriekComposite {
  std::shared_ptr<const AugmentFirst> augmented;
  std::shared_ptr<const SigmaAShriek> extended;
  std::shared_ptr<const AugmentationForgotten> result;
};

SigmaShriekComposite sigma_shriek_composite(std::shared_ptr<const BisimplicialObject> y);

// The summand-by-summand comparison between the two computations of sigma_! Y
// is a natural bijection on levels <= cutoff; both sides satisfy the
// simplicial identities and the augmentation laws hold along the way.
CheckResult check_two_routes(std::shared_ptr<const BisimplicialObject> y, int cutoff);

// A levelwise bijection between two simplicial objects, claimed natural on
// levels <= cutoff.
struct NatIso {
  std::shared_ptr<const SimplicialObject> source;
  std::shared_ptr<const SimplicialObject> target;
  LevelwiseMap map;
  int cutoff = 0;

  CheckResult verify() const;
};

// The counit sigma_! Dec X -> X: summand copies of X_k fold onto X_k.
LevelwiseMap counit_sigma(const SigmaShriek& sigma_dec_x, const SimplicialObject& x, int cutoff);

// sigma_! Dec X -> X x simplex(1), sending summand i of level k to X_k x {f_i}
// where f_i(r) = 0 iff r <= i.
NatIso counit_iso(const SSet& x, int cutoff);

// f_i : [k] -> [1].
OrdinalMap split_indicator(int k, int i);

// The counit iso is a natural bijection, its composite with the projection is
// the fold, the fold is natural, and |(sigma_! Dec X)_k| = (k+2) |X_k|.
CheckResult check_counit(const SSet& x, int cutoff);

// pi_0((Dec X)_{-,k}) -> X_k by d_0 and pi_0((Dec X)_{k,-}) -> X_k by d_{k+1}
// are bijections for k <= cutoff and natural in k.
CheckResult check_pi0_identification(const SSet& x, int cutoff);

// sigma_* Y: level n is the set of bisimplicial maps Dec simplex(n) -> Y.
class Total final : public SimplicialObject {
 public:
  explicit Total(std::shared_ptr<const BisimplicialObject> y, HomOptions options = {});

  std::size_t size(int n) const override { return level(n).maps.size(); }
  Elem act(const OrdinalMap& beta, Elem phi) const override;

  struct Level {
    std::vector<BiSMap> maps;
    std::map<BiSMap, Elem> index;
  };

  const Level& level(int n) const;
  const DecSimplex& shape(int n) const;
  Elem index_of(int n, const BiSMap& phi) const;
  const BisimplicialObject& base() const { return *y_; }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<DecSimplex>> shapes;
    std::map<int, std::unique_ptr<Level>> levels;
  };

  std::shared_ptr<const BisimplicialObject> y_;
  HomOptions options_;
  std::shared_ptr<Cache> cache_;
};

// The unit X -> sigma_* Dec X at level n: x |-> (theta |-> theta^* x).
Elem unit(const SSet& x, const Total& t, int n, Elem e);
LevelwiseMap unit_map(const SSet& x, const Total& t, int cutoff);

// sigma_* Dec X -> X^{simplex(1)} at level n: a map phi is transposed through
// the counit iso of simplex(n) to a map simplex(n) x simplex(1) -> X.
Elem comparison(const SSet& x, const Total& t, const Cotensor& c, int n, Elem phi);
LevelwiseMap comparison_map(const SSet& x, const Total& t, const Cotensor& c, int cutoff);

// The comparison is a natural bijection on levels <= cutoff, the unit is
// natural, and comparison o unit is x |-> x o projection.
CheckResult check_comparison(const SSet& x, int cutoff);

// A cell presentation of a simplicial object whose nondegenerate elements lie
// in dimensions <= top, with the normal form of every element up to top.
struct Cellization {
  SSet sset;
  std::vector<std::vector<Simplex>> normal_form;  // [n][x]
};

Cellization cellize(const SimplicialObject& x, int top);

// Transposition gives a bijection hom(sigma_! Y, X) = hom(Y, Dec X), both
// sides enumerated.
CheckResult check_adjunction(const BiSSet& y, const SSet& x);

}  // namespace declab
