#pragma once

// Backtracking search for presheaf maps out of a cell presentation. Images
// are chosen for the maximal cells only; every other cell receives the image
// forced by the face it is reached through, and each face equation is checked
// once when its cell is first assigned.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "declab/error.hpp"
#include "declab/simplicial.hpp"

namespace declab::detail {

inline constexpr Elem unassigned = std::numeric_limits<Elem>::max();

struct FaceEdge {
  std::size_t target;
  // The image the target cell is forced to take, or nothing if no image works.
  std::function<std::optional<Elem>(Elem)> forced;
};

struct SearchProblem {
  std::vector<std::vector<FaceEdge>> edges;  // per cell
  std::vector<std::size_t> candidates;       // target level size per cell
  std::function<bool(std::size_t, Elem, const std::vector<Elem>&)> filter;
  std::size_t limit = static_cast<std::size_t>(-1);
  std::size_t max_maps = static_cast<std::size_t>(-1);
};

inline std::vector<std::vector<Elem>> search_maps(const SearchProblem& problem) {
  const std::size_t cells = problem.edges.size();
  std::vector<bool> is_face(cells, false);
  for (const auto& out : problem.edges)
    for (const auto& e : out) is_face[e.target] = true;
  std::vector<std::size_t> roots;
  for (std::size_t c = 0; c < cells; ++c)
    if (!is_face[c]) roots.push_back(c);

  std::vector<std::vector<Elem>> found;
  std::vector<Elem> image(cells, unassigned);
  std::vector<std::size_t> trail;

  auto assign = [&](auto&& self, std::size_t c, Elem y) -> bool {
    if (image[c] != unassigned) return image[c] == y;
    if (problem.filter && !problem.filter(c, y, image)) return false;
    image[c] = y;
    trail.push_back(c);
    for (const auto& e : problem.edges[c]) {
      const auto forced = e.forced(y);
      if (!forced || !self(self, e.target, *forced)) return false;
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      image[trail.back()] = unassigned;
      trail.pop_back();
    }
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (found.size() >= problem.limit) return;
    if (pos == roots.size()) {
      if (found.size() >= problem.max_maps)
        throw InconclusiveError("more than " + std::to_string(problem.max_maps) + " maps");
      found.push_back(image);
      return;
    }
    const std::size_t root = roots[pos];
    for (Elem y = 0; y < problem.candidates[root]; ++y) {
      const std::size_t mark = trail.size();
      if (assign(assign, root, y)) self(self, pos + 1);
      undo(mark);
      if (found.size() >= problem.limit) return;
    }
  };
  recurse(recurse, 0);
  return found;
}

// A right inverse of a surjection: each value goes to its first preimage.
inline OrdinalMap first_section(const OrdinalMap& epi) {
  std::vector<int> v(static_cast<std::size_t>(epi.cod() + 1), -1);
  for (int r = epi.dom(); r >= 0; --r) v[static_cast<std::size_t>(epi(r))] = r;
  return OrdinalMap(epi.cod(), epi.dom(), std::move(v));
}

}  // namespace declab::detail
