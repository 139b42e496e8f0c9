#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "folkman/errors.hpp"

namespace folkman {

// Fixed-width bitmask over vertex indices [0, max_vertices). The host graph
// decides how many bits are meaningful; set bits never exceed the host order
// when produced by library operations.
class VertexSet {
public:
    static constexpr int max_vertices = 512;
    static constexpr int word_count = max_vertices / 64;

    constexpr VertexSet() = default;

    // {0, 1, ..., n-1}
    static VertexSet all(int n) {
        assert(n >= 0 && n <= max_vertices);
        VertexSet s;
        for (int w = 0; n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    void set(int v) {
        assert(v >= 0 && v < max_vertices);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < max_vertices);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool test(int v) const {
        assert(v >= 0 && v < max_vertices);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Smallest set bit, or -1 when empty.
    int first() const {
        for (int i = 0; i < word_count; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    // Smallest set bit strictly greater than v, or -1.
    int next_after(int v) const {
        int w = (v + 1) >> 6;
        if (w >= word_count) return -1;
        std::uint64_t masked = words_[w] & (~std::uint64_t{0} << ((v + 1) & 63));
        if (masked) return w * 64 + std::countr_zero(masked);
        for (++w; w < word_count; ++w)
            if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < word_count; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < word_count; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (int i = 0; i < word_count; ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < word_count; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < word_count; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (int i = 0; i < word_count; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    // Range-for over set bits, ascending.
    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next_after(v_);
            return *this;
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return a.v_ != b.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    std::array<std::uint64_t, word_count> words_{};
};

// Undirected simple graph on vertices 0..n-1 with one adjacency bitmask per
// vertex. Library combinators never mutate their inputs; a constructed graph
// is safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > VertexSet::max_vertices)
            throw InvalidParameter("graph order must be in [0, " +
                                   std::to_string(VertexSet::max_vertices) + "], got " +
                                   std::to_string(n));
        adj_.resize(n);
    }

    // C_n, edges {i, i+1 mod n}; requires n >= 3.
    static Graph cycle(int n);
    // P_k, edges {i, i+1}; requires k >= 1.
    static Graph path(int k);
    // K_n; n = 0 yields the empty graph.
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const;

    bool has_edge(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return adj_[u].test(v);
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InvalidParameter("edge endpoint out of range");
        if (u == v) throw InvalidParameter("loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    // N_G(v); throws on out-of-range v.
    const VertexSet& neighbors(int v) const {
        if (v < 0 || v >= n_)
            throw InvalidParameter("vertex " + std::to_string(v) + " out of range [0, " +
                                   std::to_string(n_) + ")");
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    VertexSet vertices() const { return VertexSet::all(n_); }

    // Unchecked row access for solvers.
    std::span<const VertexSet> rows() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Vertex bijection; image[v] is where v is sent.
struct VertexPermutation {
    std::vector<int> image;

    VertexPermutation() = default;
    explicit VertexPermutation(std::vector<int> img) : image(std::move(img)) {}

    static VertexPermutation identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }

    bool is_bijection() const;

    // this after inner: v -> this(inner(v))
    VertexPermutation compose(const VertexPermutation& inner) const;
    VertexPermutation power(int k) const;
    VertexPermutation inverse() const;

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

// Edge {u,v} present iff absent in g. Involution.
Graph complement(const Graph& g);

// Disjoint union of g1 and g2 plus all cross edges. Vertices of g1 keep their
// indices, vertices of g2 are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> vertex of the original graph
};

// Subgraph induced by s, with the index map back to g. Vertices keep their
// relative order. Throws when s is not a subset of V(g).
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Equals induced_subgraph(g, V(g) \ s).
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by smallest contained index.
std::vector<VertexSet> connected_components(const Graph& g);

// True iff perm maps edges to edges and non-edges to non-edges.
// Throws when perm is not a bijection on V(g).
bool is_automorphism(const Graph& g, const VertexPermutation& perm);

// Relabeled copy: edge {perm(u), perm(v)} for every edge {u,v} of g.
Graph apply_permutation(const Graph& g, const VertexPermutation& perm);

// Image of a vertex set under perm.
VertexSet apply_to_set(const VertexPermutation& perm, const VertexSet& s);

}  // namespace folkman
