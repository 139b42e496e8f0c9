#include "folkman/clique.hpp"

#include <utility>
#include <vector>

namespace folkman {

namespace detail {

bool find_clique_of_size(std::span<const VertexSet> adj, VertexSet cand, int k) {
    while (true) {
        if (k <= 0) return true;
        if (cand.count() < k) return false;
        if (k == 1) return true;
        int v = cand.first();
        cand.reset(v);
        if (find_clique_of_size(adj, cand & adj[v], k - 1)) return true;
    }
}

}  // namespace detail

bool has_k_clique_within(const Graph& g, const VertexSet& s, int k) {
    if (k <= 0) return true;
    return detail::find_clique_of_size(g.rows(), s & g.vertices(), k);
}

namespace {

struct MaxCliqueSolver {
    std::span<const VertexSet> adj;
    int best = 0;
    long long nodes = 0;

    void expand(VertexSet cand, int rsize) {
        ++nodes;
        if (cand.empty()) {
            if (rsize > best) best = rsize;
            return;
        }
        // Greedy sequential coloring; color classes bound the clique extension.
        std::vector<std::pair<int, int>> colored;  // (vertex, color), colors ascending
        int c = 0;
        VertexSet left = cand;
        while (!left.empty()) {
            ++c;
            VertexSet avail = left;
            while (!avail.empty()) {
                int v = avail.first();
                colored.emplace_back(v, c);
                left.reset(v);
                avail.reset(v);
                avail -= adj[v];
            }
        }
        for (int i = static_cast<int>(colored.size()) - 1; i >= 0; --i) {
            auto [v, col] = colored[i];
            if (rsize + col <= best) return;  // earlier entries have colors <= col
            expand(cand & adj[v], rsize + 1);
            cand.reset(v);
        }
    }
};

std::vector<int> degeneracy_order(const Graph& g) {
    std::vector<int> order;
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        int pick = -1, pick_deg = -1;
        for (int v : remaining) {
            int d = (g.neighbors(v) & remaining).count();
            if (pick < 0 || d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        order.push_back(pick);
        remaining.reset(pick);
    }
    return order;
}

}  // namespace

CliqueResult clique_number(const Graph& g) {
    CliqueResult res;
    const int n = g.vertex_count();
    if (n == 0) return res;

    // Relabel so low indices land in the densest core (reverse removal order):
    // the coloring bound tightens much earlier that way.
    std::vector<int> removal = degeneracy_order(g);
    std::vector<int> new_of_old(n);
    for (int i = 0; i < n; ++i) new_of_old[removal[n - 1 - i]] = i;
    std::vector<VertexSet> relabeled(n);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) relabeled[new_of_old[u]].set(new_of_old[w]);

    MaxCliqueSolver solver{std::span<const VertexSet>(relabeled)};
    solver.expand(VertexSet::all(n), 0);
    res.size = solver.best;
    res.nodes_explored = solver.nodes;

    // Lex-min witness by prefix forcing on the original labeling. A vertex
    // that cannot head a clique of the required size cannot lie in one either,
    // so dropping it is sound.
    VertexSet cand = g.vertices();
    int need = res.size;
    while (need > 0) {
        int v = cand.first();
        VertexSet sub = cand & g.neighbors(v);
        if (detail::find_clique_of_size(g.rows(), sub, need - 1)) {
            res.witness.set(v);
            cand = sub;
            --need;
        } else {
            cand.reset(v);
        }
    }
    return res;
}

}  // namespace folkman
