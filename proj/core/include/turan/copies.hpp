#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// All subgraphs of `host` isomorphic to `pattern`, each exactly once
/// (copies are identified by their edge set plus support, so patterns with
/// isolated vertices are counted the way N_T counts them). Output is sorted
/// by edge set, lexicographically on sorted edge-index sequences.
std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host);

/// |enumerate_copies(pattern, host)| without materializing: counts injective
/// edge-preserving embeddings and divides by |Aut(pattern)|. Specialized
/// fast paths for K2, K3 and complete patterns.
long long count_copies(const Graph& pattern, const Graph& host);

/// N_pattern(K_n) = n(n-1)...(n-v+1) / |Aut(pattern)|.
long long count_copies_complete(const Graph& pattern, int n);

/// True iff host contains pattern as a (not necessarily induced) subgraph.
/// Short-circuits on the first embedding.
bool contains_subgraph(const Graph& pattern, const Graph& host);

/// One copy of pattern in host if any exists (first in embedding order;
/// deterministic but not the lexicographic minimum).
std::optional<Copy> find_copy(const Graph& pattern, const Graph& host);

/// The copy with the lexicographically smallest sorted edge-index list.
std::optional<Copy> lexicographic_first_copy(const Graph& pattern, const Graph& host);

/// True iff an edge-preserving (not necessarily injective) vertex map
/// from -> to exists; equivalently, `from` is a subgraph of a blow-up of `to`.
bool homomorphism_exists(const Graph& from, const Graph& to);

/// Order of the automorphism group, by backtracking over self-isomorphisms.
long long automorphism_count(const Graph& g);

/// Exact chromatic number by branch and bound (clique lower bound, greedy
/// upper bound, k-colorability search between them).
int chromatic_number(const Graph& g);

/// Exact maximum clique size.
int clique_number(const Graph& g);

/// Visits injective edge-preserving maps pattern -> host; `induced` also
/// requires non-edges to map to non-edges. The callback receives the image
/// array indexed by pattern vertex; returning false stops the search.
void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<bool(const std::array<int, kMaxVertices>&)>& visit,
                        bool induced = false);

}  // namespace turan
