#ifndef LOOM_ISOMORPHISM_HPP
#define LOOM_ISOMORPHISM_HPP

#include <string>

#include "loom/rdf.hpp"

namespace loom {

// True if the graphs are equal up to a bijective renaming of blank nodes.
// Ground triples (no blank nodes) are compared directly; the blank-node
// portion is matched by iterated signature refinement, falling back to
// backtracking over nodes that share a signature.
bool isomorphic(const Graph& a, const Graph& b);

// Human-readable explanation of why two graphs differ, for test harness
// output: lists ground triples present on one side only, and the sizes of
// the unmatched blank-node portions. Empty string when isomorphic.
std::string describe_difference(const Graph& actual, const Graph& expected);

}  // namespace loom

#endif  // LOOM_ISOMORPHISM_HPP
