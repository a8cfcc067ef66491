#pragma once

// Normalized integer chains of simplicial objects, their homology through the
// Smith normal form, and the finite checks standing in for "the unit is a weak
// equivalence".

#include <map>
#include <string>
#include <vector>

#include "declab/integer.hpp"
#include "declab/matrix.hpp"
#include "declab/simplicial.hpp"
#include "declab/sset.hpp"

namespace declab {

struct ChainComplex {
  std::vector<std::vector<Elem>> basis;        // [n] nondegenerate elements of level n
  std::vector<std::map<Elem, std::size_t>> position;
  std::vector<MatrixZ> boundary;               // [n] : C_n -> C_{n-1}; boundary[0] has no rows

  int top() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t rank(int n) const { return basis[static_cast<std::size_t>(n)].size(); }
};

// Chains in degrees 0..top; a degenerate face contributes 0.
ChainComplex normalized_chains(const SimplicialObject& x, int top);

bool boundary_squares_to_zero(const ChainComplex& c);

// rank free summands plus Z/t for each t in torsion, each t dividing the next.
struct AbGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  std::string to_string() const;
  bool operator==(const AbGroup&) const = default;
};

// H_n for n <= degree, with generators and coordinates read off the Smith
// forms of the boundaries. Generators are listed torsion first, then free.
class Homology {
 public:
  Homology(const ChainComplex& c, int degree);

  int degree() const { return static_cast<int>(groups_.size()) - 1; }
  const AbGroup& group(int n) const { return groups_[static_cast<std::size_t>(n)]; }
  const std::vector<AbGroup>& groups() const { return groups_; }
  // Cycles representing the generators of H_n.
  std::vector<std::vector<Int>> generators(int n) const;
  // Coordinates of the class of a cycle; torsion coordinates reduced to [0, t).
  std::vector<Int> coordinates(int n, const std::vector<Int>& cycle) const;

 private:
  struct Degree {
    SmithForm boundary;  // of d_n
    SmithForm relations;  // of d_{n+1} in kernel coordinates
    std::vector<Int> divisors;  // one per kernel coordinate, 0 for free
  };
  std::vector<Degree> degrees_;
  std::vector<AbGroup> groups_;
};

std::vector<AbGroup> homology(const SimplicialObject& x, int degree);

// Chain-level and homology-level maps induced by a levelwise map f : A -> B.
struct InducedMaps {
  std::vector<MatrixZ> chain;     // [n] : C_n(A) -> C_n(B), n <= degree + 1
  std::vector<MatrixZ> homology;  // [n] : generators of H_n(A) -> coordinates in H_n(B)
  std::vector<AbGroup> source;
  std::vector<AbGroup> target;
};

// Throws ValidationError if f does not commute with the boundaries.
InducedMaps induced(const SimplicialObject& a, const SimplicialObject& b, const LevelwiseMap& f, int degree);

// True iff H_n(A) and H_n(B) agree and the induced map is onto, for n <= degree.
bool is_homology_iso(const InducedMaps& maps);
bool is_homology_iso(const SimplicialObject& a, const SimplicialObject& b, const LevelwiseMap& f, int degree);

// With d^1 : simplex(0) -> simplex(1) and s^0 : simplex(1) -> simplex(0), the
// induced d_1 : X^{simplex(1)} -> X^{simplex(0)} and s_0 in the other direction
// satisfy d_1 s_0 = id on levels <= cutoff, and X_n = (X^{simplex(0)})_n.
CheckResult verify_retraction(const SSet& x, int cutoff);

struct UnitHomology {
  CheckResult result;
  std::vector<AbGroup> source;  // H_*(X)
  std::vector<AbGroup> target;  // H_*(sigma_* Dec X), computed on X^{simplex(1)}
  std::vector<MatrixZ> maps;    // induced maps in the generator coordinates
};

// The unit X -> sigma_* Dec X followed by the comparison with X^{simplex(1)}
// induces isomorphisms on H_n for n <= degree.
UnitHomology check_unit_homology(const SSet& x, int degree);

}  // namespace declab
