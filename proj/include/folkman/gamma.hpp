#pragma once

#include <vector>

#include "folkman/graph.hpp"
#include "folkman/instance.hpp"

namespace folkman {

// The graph Gamma_p on 4p+2 vertices: the complement of C_{2p+1} on
// v_1..v_{2p+1}, plus 2p+1 pairwise independent vertices u_1..u_{2p+1} with
// N(u_i) = M_i, where M_1 = V(C_{2p+1}) \ {v_1, v_{2p-1}, v_{2p-2}} and
// M_i = sigma^{i-1}(M_1) under the rotation sigma (an automorphism).
//
// Layout: v_i sits at index i-1 (0..2p), u_i at index 2p+1+(i-1).
struct GammaGraph {
    int p = 0;
    Graph graph;
    std::vector<VertexSet> m_sets;  // M_1..M_{2p+1} as vertex-index sets
    VertexPermutation sigma;

    int cycle_len() const { return 2 * p + 1; }
    int v(int i) const;  // vertex index of v_i, 1-based i
    int u(int i) const;  // vertex index of u_i, 1-based i
};

// Builds Gamma_p. Requires p >= 2 (the theorems use p >= 3; p = 2 is allowed
// for exploratory checks). Throws InvalidParameter otherwise.
GammaGraph build_gamma(int p);

// The join K_{m-p-2} + Gamma_p on m+3p vertices, with the complete block at
// indices 0..m-p-3 and Gamma_p shifted after it. Throws OutOfTheoremRange if
// p < 3 and ConstructionUndefined if m < p+2.
Graph witness_graph(const ArrowInstance& inst);

// Gamma_p's rotation extended over a complete prefix block left fixed
// pointwise: an automorphism of join(K_{k_block}, Gamma_p).
VertexPermutation witness_sigma(const GammaGraph& gamma, int k_block);

}  // namespace folkman
