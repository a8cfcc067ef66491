#pragma once

// Bisimplicial sets. Two presentations share the BisimplicialObject
// interface: BiSSet lists nondegenerate bicells with horizontal and vertical
// faces in normal form, and Decalage is the virtual (k, l) |-> X_{k+1+l}.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "declab/hom.hpp"
#include "declab/simplicial.hpp"
#include "declab/sset.hpp"

namespace declab {

struct BiSimplex {
  std::size_t cell = 0;
  OrdinalMap hdeg;  // [k] ->> [p]
  OrdinalMap vdeg;  // [l] ->> [q]

  bool is_nondegenerate() const { return hdeg.is_identity() && vdeg.is_identity(); }
  std::string to_string() const;

  auto operator<=>(const BiSimplex&) const = default;
};

struct BiCell {
  int p = 0;  // horizontal degree
  int q = 0;  // vertical degree
  std::vector<BiSimplex> hfaces;  // p+1 faces of bidegree (p-1, q), empty if p == 0
  std::vector<BiSimplex> vfaces;  // q+1 faces of bidegree (p, q-1), empty if q == 0

  bool operator==(const BiCell&) const = default;
};

class BiSSet final : public BisimplicialObject {
 public:
  BiSSet();
  // Bicells must only reference earlier bicells. Throws ValidationError
  // unless the bisimplicial identities hold.
  explicit BiSSet(std::vector<BiCell> cells);

  const std::vector<BiCell>& cells() const { return data_->cells; }
  const BiCell& cell(std::size_t id) const { return data_->cells[id]; }
  BiSimplex nondegenerate(std::size_t id) const;

  BiSimplex act(const OrdinalMap& horizontal, const OrdinalMap& vertical, const BiSimplex& b) const;

  const std::vector<BiSimplex>& level(int k, int l) const;
  Elem index_of(int k, int l, const BiSimplex& b) const;

  std::size_t size(int k, int l) const override { return level(k, l).size(); }
  Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const override;

  void validate() const;

  friend bool operator==(const BiSSet& a, const BiSSet& b) { return a.data_->cells == b.data_->cells; }

 private:
  struct Data {
    std::vector<BiCell> cells;
  };
  struct Level {
    std::vector<BiSimplex> simplices;
    std::map<BiSimplex, Elem> index;
  };
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<Level>> levels;
  };

  const Level& level_data(int k, int l) const;

  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
};

// (X [x] Y)_{k,l} = X_k x Y_l, with bicells the pairs of cells.
BiSSet external_product(const SSet& x, const SSet& y);

// Dec X : (k, l) |-> X_{k+1+l}, acting through ordinal sums.
class Decalage final : public BisimplicialObject {
 public:
  explicit Decalage(std::shared_ptr<const SimplicialObject> base) : base_(std::move(base)) {}

  std::size_t size(int k, int l) const override { return base_->size(k + 1 + l); }
  Elem act(const OrdinalMap& horizontal, const OrdinalMap& vertical, Elem x) const override {
    return base_->act(ordinal_sum(horizontal, vertical), x);
  }
  const SimplicialObject& base() const { return *base_; }

 private:
  std::shared_ptr<const SimplicialObject> base_;
};

std::shared_ptr<const Decalage> dec(std::shared_ptr<const SimplicialObject> x);
std::shared_ptr<const Decalage> dec(const SSet& x);

// Dec simplex(n) with its nondegenerate bicells made explicit: the monotone
// maps [k+1+l] -> [n] injective on each block, ordered by total degree.
class DecSimplex {
 public:
  explicit DecSimplex(int n);

  int n() const { return n_; }
  const BiSSet& bisset() const { return bisset_; }
  // The map [p+1+q] -> [n] of a bicell.
  const OrdinalMap& map_of(std::size_t cell) const { return maps_[cell]; }
  // Normal form of an element theta : [k+1+l] -> [n] of bidegree (k, l).
  BiSimplex bisimplex_of(int k, const OrdinalMap& theta) const;

 private:
  int n_;
  BiSSet bisset_;
  std::vector<OrdinalMap> maps_;
  std::map<std::pair<int, OrdinalMap>, std::size_t> by_split_;
};

struct BiSMap {
  std::vector<Elem> images;  // per bicell

  auto operator<=>(const BiSMap&) const = default;
};

Elem evaluate(const BisimplicialObject& target, const BiSMap& f, const BiSimplex& b);
bool is_bisimplicial(const BiSSet& source, const BisimplicialObject& target, const BiSMap& f);

// Every bisimplicial map A -> Y, sorted. The search works as for simplicial
// maps, seeded at the maximal bicells.
std::vector<BiSMap> hom(const BiSSet& a, const BisimplicialObject& y, const HomOptions& options = {});

}  // namespace declab
