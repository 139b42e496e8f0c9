#pragma once

#include <optional>
#include <vector>

#include "folkman/clique.hpp"
#include "folkman/graph.hpp"
#include "folkman/instance.hpp"

namespace folkman {

// A (partial) assignment of colors 1..r to vertices; 0 means unassigned.
struct Coloring {
    static constexpr int unassigned = 0;

    std::vector<int> colors;

    Coloring() = default;
    explicit Coloring(int n) : colors(n, unassigned) {}

    int size() const { return static_cast<int>(colors.size()); }
    bool fully_assigned() const;
    VertexSet color_class(int c) const;  // vertices with color c (1-based)

    bool operator==(const Coloring&) const = default;
};

// True iff c is a full r-coloring of g in which no class i contains an
// a_i-clique. Throws InvalidParameter on size mismatch, unassigned vertices,
// or colors outside [1, r].
bool is_free_coloring(const Graph& g, const ArrowInstance& inst, const Coloring& c);

enum class OrderPolicy {
    degree_descending,  // default: degree desc, index asc tiebreak
    index_ascending,
    degree_ascending,
    given,  // explicit permutation in SearchConfig::given_order
};

struct SearchConfig {
    OrderPolicy order = OrderPolicy::degree_descending;
    std::vector<int> given_order;  // position -> vertex, used iff order == given
    // Automorphisms of the searched graph; used to fix the color ordering on
    // the orbit of the first search vertex. Validated via is_automorphism.
    std::vector<VertexPermutation> symmetry_generators;
    bool deterministic = false;  // sequential search, reproducible stats
    int worker_width = 0;        // parallel workers; 0 = hardware concurrency
    long long node_budget = 0;   // abort with GuardExceeded past this; 0 = off
};

struct SearchStats {
    long long nodes = 0;
    long long prunes = 0;  // color assignments rejected by the clique check
    double wall_ms = 0.0;
    bool deterministic = false;
};

enum class Verdict { arrows, not_arrows };

struct ArrowResult {
    Verdict verdict = Verdict::arrows;
    std::optional<Coloring> witness;  // present iff not_arrows; always free
    SearchStats stats;
};

// Decides g -> (a_1,...,a_r): true ("arrows") iff every r-coloring of V(g)
// puts an a_i-clique into some class i. Exhaustive DFS over colorings in a
// fixed vertex order, pruning assignments that complete a forbidden clique;
// interchangeable equal-threshold colors and the supplied-symmetry orbit of
// the first vertex are canonicalized away. The verdict is independent of the
// configuration; only stats and wall time vary. Found witnesses are
// re-validated before being returned. Throws GuardExceeded if node_budget
// trips before a verdict.
ArrowResult arrows(const Graph& g, const ArrowInstance& inst, const SearchConfig& cfg = {});

// Independent oracle: enumerates all r^n colorings and tests each class with
// direct pairwise adjacency checks (no shared search code). Guarded at
// r^n <= 10^8; throws GuardExceeded beyond.
ArrowResult arrows_exhaustive(const Graph& g, const ArrowInstance& inst);

// True iff g arrows the instance and cl(g) < q.
bool in_H(const Graph& g, const ArrowInstance& inst, int q, const SearchConfig& cfg = {});

// True iff the chromatic number of g exceeds r, realized as
// arrows(g, (2,...,2)) with r twos.
bool chromatic_exceeds(const Graph& g, int r, const SearchConfig& cfg = {});

}  // namespace folkman
