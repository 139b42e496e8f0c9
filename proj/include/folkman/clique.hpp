#pragma once

#include <span>

#include "folkman/graph.hpp"

namespace folkman {

struct CliqueResult {
    int size = 0;
    VertexSet witness;  // lexicographically smallest maximum clique
    long long nodes_explored = 0;
};

// Exact maximum clique: branch-and-bound with a greedy sequential-coloring
// bound over a degeneracy preorder. The witness is the lexicographically
// smallest maximum clique (comparing sorted vertex lists), for reproducible
// certificates.
CliqueResult clique_number(const Graph& g);

// True iff the subgraph induced on s contains a k-clique. k <= 0 is trivially
// true. Stops at the first witness rather than maximizing.
bool has_k_clique_within(const Graph& g, const VertexSet& s, int k);

namespace detail {

// First-fit k-clique detector over raw adjacency rows; allocation-free, used
// as the hot inner check of the arrowing search.
bool find_clique_of_size(std::span<const VertexSet> adj, VertexSet cand, int k);

}  // namespace detail

}  // namespace folkman
