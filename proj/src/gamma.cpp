#include "folkman/gamma.hpp"

#include <cassert>
#include <numeric>
#include <string>

namespace folkman {

int GammaGraph::v(int i) const {
    assert(i >= 1 && i <= cycle_len());
    return i - 1;
}

int GammaGraph::u(int i) const {
    assert(i >= 1 && i <= cycle_len());
    return cycle_len() + (i - 1);
}

GammaGraph build_gamma(int p) {
    if (p < 2) throw InvalidParameter("Gamma_p needs p >= 2, got " + std::to_string(p));
    const int c = 2 * p + 1;
    const int n = 2 * c;
    if (n > VertexSet::max_vertices)
        throw InvalidParameter("Gamma_" + std::to_string(p) + " exceeds the supported graph size");

    GammaGraph gamma;
    gamma.p = p;
    gamma.graph = Graph(n);

    // v-block: complement of C_{2p+1}.
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            int d = j - i;
            if (d != 1 && d != c - 1) gamma.graph.add_edge(i, j);
        }

    // M_1 excludes v_1, v_{2p-2}, v_{2p-1}; M_i is its (i-1)-fold rotation.
    VertexSet m1 = VertexSet::all(c);
    m1.reset(0);
    m1.reset(2 * p - 3);
    m1.reset(2 * p - 2);
    for (int i = 0; i < c; ++i) {
        VertexSet mi;
        for (int x : m1) mi.set((x + i) % c);
        gamma.m_sets.push_back(mi);
        for (int x : mi) gamma.graph.add_edge(c + i, x);
    }

    std::vector<int> img(n);
    for (int i = 0; i < c; ++i) {
        img[i] = (i + 1) % c;
        img[c + i] = c + (i + 1) % c;
    }
    gamma.sigma = VertexPermutation(std::move(img));
    return gamma;
}

VertexPermutation witness_sigma(const GammaGraph& gamma, int k_block) {
    if (k_block < 0) throw InvalidParameter("block size must be non-negative");
    std::vector<int> img(k_block + gamma.graph.vertex_count());
    std::iota(img.begin(), img.begin() + k_block, 0);
    for (int i = 0; i < gamma.graph.vertex_count(); ++i)
        img[k_block + i] = k_block + gamma.sigma(i);
    return VertexPermutation(std::move(img));
}

Graph witness_graph(const ArrowInstance& inst) {
    if (inst.p < 3)
        throw OutOfTheoremRange("witness construction needs max a_i >= 3, got p = " +
                                std::to_string(inst.p));
    if (inst.m < inst.p + 2)
        throw ConstructionUndefined("K_{m-p-2} undefined: m = " + std::to_string(inst.m) +
                                    " < p+2 = " + std::to_string(inst.p + 2));
    GammaGraph gamma = build_gamma(inst.p);
    return join(Graph::complete(inst.m - inst.p - 2), gamma.graph);
}

}  // namespace folkman
