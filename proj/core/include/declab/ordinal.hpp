#pragma once

// The simplex category and its augmentation by the empty ordinal [-1].
//
// An object [n] is the ordered set {0, ..., n}; [-1] is empty. Morphisms are
// weakly monotone maps, stored as their value sequence. The empty ordinal is
// encoded as an empty value sequence so that ordinal sums and splittings never
// need to special-case it.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace declab {

struct Ordinal {
  int n = 0;

  constexpr Ordinal() = default;
  explicit Ordinal(int n);

  int size() const { return n + 1; }
  auto operator<=>(const Ordinal&) const = default;
};

class OrdinalMap {
 public:
  // The identity of [-1].
  OrdinalMap() = default;

  // Validates monotonicity and range; throws PreconditionError.
  OrdinalMap(int dom, int cod, std::vector<int> values);

  static OrdinalMap identity(int n);
  // The unique map [-1] -> [n].
  static OrdinalMap empty(int cod);
  static OrdinalMap constant(int dom, int cod, int value);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  bool is_injective() const;
  bool is_surjective() const;

  std::string to_string() const;

  auto operator<=>(const OrdinalMap&) const = default;

 private:
  int dom_ = -1;
  int cod_ = -1;
  std::vector<int> values_;
};

// g o f. Throws CompositionError when f.cod() != g.dom().
OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f);

// [k] + [l] = [k+1+l].
Ordinal ordinal_sum(Ordinal k, Ordinal l);

// The ordinal sum of two maps: the first block keeps its values, the second
// block is shifted past the first codomain.
OrdinalMap ordinal_sum(const OrdinalMap& first, const OrdinalMap& second);

struct Split {
  int j = -1;
  OrdinalMap first;   // [j] -> [i]
  OrdinalMap second;  // [l-j-1] -> [k-i-1]

  auto operator<=>(const Split&) const = default;
};

// The unique decomposition beta = ordinal_sum(first, second) with
// first.cod() == i. The split point j is the last position whose value is at
// most i, or -1 if there is none.
Split split_at(const OrdinalMap& beta, int i);

// d^i : [n-1] -> [n], skipping i.
OrdinalMap coface(int n, int i);
// s^i : [n+1] -> [n], repeating i.
OrdinalMap codegeneracy(int n, int i);

struct EzFactorization {
  OrdinalMap mono;  // injective
  OrdinalMap epi;   // surjective

  auto operator<=>(const EzFactorization&) const = default;
};

// beta = mono o epi. For the empty domain the factorization is (beta, id).
EzFactorization ez_factor(const OrdinalMap& beta);

// For a non-identity injection mono, the first index i missing from its
// image and the injection rest with mono = d^i o rest.
std::pair<int, OrdinalMap> peel_coface(const OrdinalMap& mono);

// All monotone maps [l] -> [k] in lexicographic order of their values.
std::vector<OrdinalMap> enumerate_maps(Ordinal l, Ordinal k);
std::vector<OrdinalMap> enumerate_surjections(Ordinal l, Ordinal k);
std::vector<OrdinalMap> enumerate_injections(Ordinal l, Ordinal k);

// Flat report encoding `[l k v0 ... vl]`.
std::vector<int> to_flat(const OrdinalMap& beta);
OrdinalMap from_flat(const std::vector<int>& flat);

}  // namespace declab
