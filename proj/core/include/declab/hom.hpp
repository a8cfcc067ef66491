#pragma once

// Simplicial maps out of cell-presented simplicial sets, exhaustive hom-set
// enumeration, and the cotensor X^K whose n-simplices are the maps
// simplex(n) x K -> X.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "declab/simplicial.hpp"
#include "declab/sset.hpp"

namespace declab {

// A simplicial map out of a cell-presented source: the image of each
// nondegenerate cell, as an element of the target level of the same dimension.
struct SMap {
  std::vector<std::vector<Elem>> images;  // images[dim][cell]

  Elem operator()(CellId c) const {
    return images[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
  }
  auto operator<=>(const SMap&) const = default;
};

// f applied to an arbitrary simplex of the source.
Elem evaluate(const SimplicialObject& target, const SMap& f, const Simplex& s);

// f on level n of the source, as an index table.
std::vector<Elem> level_map(const SSet& source, const SimplicialObject& target, const SMap& f, int n);
LevelwiseMap levelwise(const SSet& source, const SimplicialObject& target, const SMap& f, int cutoff);

// True iff f commutes with every recorded face.
bool is_simplicial(const SSet& source, const SimplicialObject& target, const SMap& f);

// g o f for f : A -> B and g : B -> X with B cell-presented.
SMap compose(const SSet& a, const SSet& b, const SimplicialObject& x, const SMap& g, const SMap& f);

// The map of a cell-presented source into itself.
SMap identity_map(const SSet& a);

// Constraint applied to each candidate image during enumeration.
using CandidateFilter = std::function<bool(CellId, Elem, const SMap& partial)>;

struct HomOptions {
  // Enumeration stops with InconclusiveError beyond this many maps.
  std::size_t max_maps = 5'000'000;
  // Enumeration stops quietly after this many maps.
  std::size_t limit = static_cast<std::size_t>(-1);
  CandidateFilter filter;
};

// Every simplicial map A -> X. Images are chosen for the maximal cells of A
// and pushed down through the recorded faces; the result is sorted, which is
// lexicographic order of (dimension, cell, image).
std::vector<SMap> hom(const SSet& a, const SimplicialObject& x, const HomOptions& options = {});

// A levelwise-injective map A -> X; the first one the search meets.
std::optional<SMap> find_embedding(const SSet& a, const SSet& x);

// Collapses the image of find_embedding(a, x). Throws ValidationError if a
// does not embed or is empty.
SSet quotient(const SSet& x, const SSet& a);

// Hom-sets indexed for lookup, as produced by the cotensor and total levels.
struct IndexedMaps {
  std::vector<SMap> maps;
  std::map<SMap, Elem> index;

  Elem index_of(const SMap& f) const;
};

// X^K, levelwise hom(simplex(n) x K, X). Levels are computed on demand and
// memoized.
class Cotensor final : public SimplicialObject {
 public:
  Cotensor(std::shared_ptr<const SimplicialObject> x, SSet k, HomOptions options = {});

  std::size_t size(int n) const override { return level(n).maps.size(); }
  Elem act(const OrdinalMap& beta, Elem g) const override;

  const IndexedMaps& level(int n) const;
  const Product& domain(int n) const;
  const SimplicialObject& base() const { return *x_; }
  const SSet& exponent() const { return k_; }

  // g o (beta x id) as a map simplex(m) x K -> X, for beta : [m] -> [n].
  SMap precompose(const OrdinalMap& beta, const SMap& g) const;
  // The element x-bar o projection for x in level n of the base.
  Elem constant(int n, Elem x) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<Product>> domains;
    std::map<int, std::unique_ptr<IndexedMaps>> levels;
  };

  std::shared_ptr<const SimplicialObject> x_;
  SSet k_;
  HomOptions options_;
  std::shared_ptr<Cache> cache_;
};

// The map X^K -> X^J induced by h : J -> K, at level n: g |-> g o (id x h).
// `from` has exponent K and `to` has exponent J over the same base.
Elem along_exponent(const Cotensor& from, const Cotensor& to, const SMap& h, int n, Elem g);

}  // namespace declab
