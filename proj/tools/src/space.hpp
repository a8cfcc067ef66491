#pragma once

// Builder expressions for the spaces the checks run on.
//
//   space   := simplex(n) | boundary(n) | horn(n, k) | product(space, space)
//            | quotient(space, space) | disjoint(space, space)
//   bispace := external(space, space) | dec_simplex(n)
//
// Whitespace is ignored. Errors carry the offset into the expression.

#include <string>

#include "declab/bisset.hpp"
#include "declab/sset.hpp"

namespace declab::cli {

SSet parse_space(const std::string& expr);
BiSSet parse_bispace(const std::string& expr);

}  // namespace declab::cli
