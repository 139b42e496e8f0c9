#include "folkman/graph.hpp"

#include <algorithm>
#include <numeric>

namespace folkman {

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle needs at least 3 vertices, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(int k) {
    if (k < 1) throw InvalidParameter("path needs at least 1 vertex, got " + std::to_string(k));
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

std::int64_t Graph::edge_count() const {
    std::int64_t deg_sum = 0;
    for (const auto& row : adj_) deg_sum += row.count();
    return deg_sum / 2;
}

VertexPermutation VertexPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return VertexPermutation(std::move(img));
}

bool VertexPermutation::is_bijection() const {
    int n = size();
    std::vector<bool> seen(n, false);
    for (int v : image) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& inner) const {
    if (size() != inner.size()) throw InvalidParameter("permutation size mismatch in compose");
    std::vector<int> img(image.size());
    for (int v = 0; v < size(); ++v) img[v] = image[inner.image[v]];
    return VertexPermutation(std::move(img));
}

VertexPermutation VertexPermutation::power(int k) const {
    if (k < 0) throw InvalidParameter("negative permutation power");
    VertexPermutation result = identity(size());
    for (int i = 0; i < k; ++i) result = compose(result);
    return result;
}

VertexPermutation VertexPermutation::inverse() const {
    if (!is_bijection()) throw InvalidParameter("cannot invert a non-bijection");
    std::vector<int> img(image.size());
    for (int v = 0; v < size(); ++v) img[image[v]] = v;
    return VertexPermutation(std::move(img));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    Graph out(n1 + n2);
    for (int u = 0; u < n1; ++u)
        for (int v : g1.neighbors(u))
            if (u < v) out.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v : g2.neighbors(u))
            if (u < v) out.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw InvalidParameter("induced subgraph: vertex set not contained in the graph");
    std::vector<int> map = s.to_vector();
    int k = static_cast<int>(map.size());
    Graph out(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(map[i], map[j])) out.add_edge(i, j);
    return {std::move(out), std::move(map)};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw InvalidParameter("delete: vertex set not contained in the graph");
    return induced_subgraph(g, g.vertices() - s);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unvisited = g.vertices();
    while (!unvisited.empty()) {
        int start = unvisited.first();
        VertexSet comp;
        VertexSet frontier = VertexSet::of({start});
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
        }
        comps.push_back(comp);
        unvisited -= comp;
    }
    return comps;
}

bool is_automorphism(const Graph& g, const VertexPermutation& perm) {
    if (perm.size() != g.vertex_count())
        throw InvalidParameter("permutation length does not match graph order");
    if (!perm.is_bijection()) throw InvalidParameter("permutation is not a bijection");
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        VertexSet mapped;
        for (int u : g.neighbors(v)) mapped.set(perm(u));
        if (mapped != g.neighbors(perm(v))) return false;
    }
    return true;
}

Graph apply_permutation(const Graph& g, const VertexPermutation& perm) {
    if (perm.size() != g.vertex_count())
        throw InvalidParameter("permutation length does not match graph order");
    if (!perm.is_bijection()) throw InvalidParameter("permutation is not a bijection");
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) out.add_edge(perm(u), perm(v));
    return out;
}

VertexSet apply_to_set(const VertexPermutation& perm, const VertexSet& s) {
    VertexSet out;
    for (int v : s) out.set(perm(v));
    return out;
}

}  // namespace folkman
