#pragma once

#include <span>
#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Canonical form of a labeled graph: a byte string equal for two graphs
/// iff they are isomorphic. Computed by color refinement plus backtracking
/// over the refined cells (individualization-refinement), taking the
/// minimum leaf encoding.
std::string canonical_form(const Graph& g);

/// Same, for vertex-colored graphs: equal iff there is a color-preserving
/// isomorphism. `colors` are arbitrary small non-negative ints per vertex.
std::string canonical_form_colored(const Graph& g, std::span<const int> colors);

}  // namespace turan
