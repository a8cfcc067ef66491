#pragma once

#include <string>
#include <utility>
#include <vector>

#include "declab/hom.hpp"
#include "declab/sset.hpp"

namespace corpus {

inline declab::SSet circle() { return declab::quotient(declab::simplex(1), declab::boundary(1)); }

// One vertex v, one edge e and one triangle with faces (e, s_0 v, e).
inline declab::SSet projective_plane() {
  return declab::parse_sset(
      "SSET v1\n"
      "cell 0 dim 0\n"
      "cell 1 dim 1\nface 0 = (0) 0\nface 1 = (0) 0\n"
      "cell 2 dim 2\nface 0 = (0 1) 1\nface 1 = (0 0) 0\nface 2 = (0 1) 1\n");
}

inline std::vector<std::pair<std::string, declab::SSet>> all() {
  using namespace declab;
  return {
      {"simplex(0)", simplex(0)},   {"simplex(1)", simplex(1)}, {"simplex(2)", simplex(2)},
      {"boundary(2)", boundary(2)}, {"boundary(3)", boundary(3)}, {"horn(2, 1)", horn(2, 1)},
      {"circle", circle()},         {"square", product(simplex(1), simplex(1)).sset()},
  };
}

}  // namespace corpus
