#pragma once

// Finite simplicial sets presented by their nondegenerate cells.
//
// Every simplex is stored in Eilenberg-Zilber normal form: a surjection
// [n] ->> [m] applied to a nondegenerate m-cell. The faces of each cell are
// recorded in that form, and all structure maps are computed from them.

#include <compare>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "declab/ordinal.hpp"
#include "declab/simplicial.hpp"

namespace declab {

struct CellId {
  int dim = 0;
  int index = 0;

  auto operator<=>(const CellId&) const = default;
};

struct Simplex {
  CellId cell;
  OrdinalMap deg;  // surjection [n] ->> [cell.dim]

  int dim() const { return deg.dom(); }
  bool is_nondegenerate() const { return deg.dom() == cell.dim; }
  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;
};

class SSet final : public SimplicialObject {
 public:
  // faces[n][c] holds the n+1 faces of cell (n, c); 0-cells have none.
  using FaceTable = std::vector<std::vector<std::vector<Simplex>>>;

  SSet();
  // Throws ValidationError unless the faces reference existing cells and
  // satisfy the simplicial identities.
  explicit SSet(FaceTable faces);
  // No validation; only for constructing deliberately broken inputs.
  static SSet unchecked(FaceTable faces);

  // Highest dimension carrying a cell, -1 for the empty simplicial set.
  int dimension() const;
  std::size_t cell_count(int dim) const;
  std::size_t total_cells() const;
  const FaceTable& face_table() const { return data_->faces; }
  const Simplex& face(CellId cell, int i) const;
  Simplex cell(CellId id) const;

  // EZ normal form of s . beta. Requires beta.cod() == s.dim() and beta.dom() >= 0.
  Simplex act(const OrdinalMap& beta, const Simplex& s) const;

  // X_n in a fixed order: cell dimension ascending, then cells in presentation
  // order, then surjections in lexicographic order.
  const std::vector<Simplex>& level(int n) const;
  Elem index_of(const Simplex& s) const;

  using SimplicialObject::face;
  std::size_t size(int n) const override { return level(n).size(); }
  Elem act(const OrdinalMap& beta, Elem x) const override;
  bool is_degenerate(int n, Elem x) const override;

  // Throws ValidationError describing the first violated identity.
  void validate() const;

  friend bool operator==(const SSet& a, const SSet& b) { return a.data_->faces == b.data_->faces; }

 private:
  struct Data {
    FaceTable faces;
  };
  struct Level {
    std::vector<Simplex> simplices;
    std::map<Simplex, Elem> index;
  };
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<Level>> levels;
  };

  const Level& level_data(int n) const;
  Simplex face_along(CellId cell, const OrdinalMap& mono) const;

  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
};

// Builders.
SSet simplex(int n);
SSet boundary(int n);
SSet horn(int n, int k);
SSet disjoint_union(const SSet& x, const SSet& y);

// The simplex of the standard simplex simplex(n) corresponding to a monotone
// map theta : [m] -> [n], and back.
Simplex standard_simplex(int n, const OrdinalMap& theta);
OrdinalMap standard_map(int n, const Simplex& s);

// Levelwise cartesian product with nondegenerate cells extracted as the pairs
// that are not jointly degenerate.
class Product {
 public:
  Product(const SSet& first, const SSet& second);

  const SSet& sset() const { return sset_; }
  const SSet& first() const { return first_; }
  const SSet& second() const { return second_; }
  const std::pair<Simplex, Simplex>& components(CellId cell) const;

  // The EZ normal form of the pair (x, y) of equal dimension.
  Simplex simplex_of(const Simplex& x, const Simplex& y) const;
  // Components of an arbitrary simplex of the product.
  std::pair<Simplex, Simplex> split(const Simplex& s) const;

 private:
  SSet first_;
  SSet second_;
  SSet sset_;
  std::vector<std::vector<std::pair<Simplex, Simplex>>> components_;
  std::map<std::pair<Simplex, Simplex>, CellId> lookup_;
};

Product product(const SSet& x, const SSet& y);

// The tensor X x K; for sets it is the product, with the canonical map
// X x K -> X given by Product::split(...).first.
inline Product tensor(const SSet& x, const SSet& k) { return Product(x, k); }

// A face-closed set of cells.
struct Subcomplex {
  std::vector<std::vector<bool>> cells;  // cells[dim][index]

  bool contains(CellId c) const;
  bool empty() const;
};

// Collapses a nonempty face-closed subcomplex to a single vertex, which
// becomes vertex 0 of the result. Throws ValidationError otherwise.
SSet quotient(const SSet& x, const Subcomplex& a);

// `SSET v1` text format.
void print_sset(std::ostream& out, const SSet& x);
std::string print_sset(const SSet& x);
SSet parse_sset(std::istream& in);
SSet parse_sset(const std::string& text);

}  // namespace declab
