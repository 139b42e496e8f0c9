#include "folkman/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace folkman {

bool Coloring::fully_assigned() const {
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c != unassigned; });
}

VertexSet Coloring::color_class(int c) const {
    VertexSet s;
    for (int v = 0; v < size(); ++v)
        if (colors[v] == c) s.set(v);
    return s;
}

bool is_free_coloring(const Graph& g, const ArrowInstance& inst, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw InvalidParameter("coloring length does not match graph order");
    const int r = inst.r();
    for (int v = 0; v < c.size(); ++v) {
        if (c.colors[v] == Coloring::unassigned)
            throw InvalidParameter("vertex " + std::to_string(v) + " is unassigned");
        if (c.colors[v] < 1 || c.colors[v] > r)
            throw InvalidParameter("vertex " + std::to_string(v) + " has color outside [1, " +
                                   std::to_string(r) + "]");
    }
    for (int i = 1; i <= r; ++i)
        if (has_k_clique_within(g, c.color_class(i), inst.a[i - 1])) return false;
    return true;
}

namespace {

struct SearchPlan {
    std::vector<int> order;       // position -> vertex
    std::vector<int> group_prev;  // color -> previous color of equal threshold, or -1
    VertexSet orbit_rest;         // orbit of order[0] under the generators, minus order[0]
};

std::vector<int> make_order(const Graph& g, const SearchConfig& cfg) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    switch (cfg.order) {
        case OrderPolicy::index_ascending:
            break;
        case OrderPolicy::degree_descending:
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return g.degree(x) > g.degree(y); });
            break;
        case OrderPolicy::degree_ascending:
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return g.degree(x) < g.degree(y); });
            break;
        case OrderPolicy::given: {
            if (static_cast<int>(cfg.given_order.size()) != n)
                throw InvalidParameter("given vertex order length does not match graph order");
            if (!VertexPermutation(cfg.given_order).is_bijection())
                throw InvalidParameter("given vertex order is not a permutation");
            order = cfg.given_order;
            break;
        }
    }
    return order;
}

SearchPlan prepare(const Graph& g, const ArrowInstance& inst, const SearchConfig& cfg) {
    SearchPlan plan;
    plan.order = make_order(g, cfg);

    const int r = inst.r();
    plan.group_prev.assign(r, -1);
    for (int c = 0; c < r; ++c)
        for (int b = c - 1; b >= 0; --b)
            if (inst.a[b] == inst.a[c]) {
                plan.group_prev[c] = b;
                break;
            }

    for (const auto& gen : cfg.symmetry_generators)
        if (!is_automorphism(g, gen))
            throw InvalidParameter("symmetry generator is not an automorphism of the graph");
    if (!cfg.symmetry_generators.empty() && g.vertex_count() > 0) {
        // Orbit closure under the generators alone suffices: every generator
        // has finite order, so inverses are reachable as powers.
        VertexSet orbit = VertexSet::of({plan.order[0]});
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& gen : cfg.symmetry_generators) {
                VertexSet img = apply_to_set(gen, orbit);
                if (!img.subset_of(orbit)) {
                    orbit |= img;
                    grew = true;
                }
            }
        }
        orbit.reset(plan.order[0]);
        plan.orbit_rest = orbit;
    }
    return plan;
}

struct Dfs {
    const Graph& g;
    const ArrowInstance& inst;
    const SearchPlan& plan;
    std::vector<VertexSet> classes;
    std::vector<int> assignment;  // vertex -> 0-based color, -1 unassigned
    long long nodes = 0;
    long long prunes = 0;
    std::atomic<bool>* stop = nullptr;
    std::atomic<long long>* shared_nodes = nullptr;
    long long budget = 0;

    Dfs(const Graph& g, const ArrowInstance& inst, const SearchPlan& plan)
        : g(g), inst(inst), plan(plan), classes(inst.r()), assignment(g.vertex_count(), -1) {}

    // A color is admissible for v iff (a) it does not open a fresh class while
    // an earlier class of the same threshold is still empty, (b) v is not an
    // orbit sibling of the first search vertex taking a smaller color, and
    // (c) N(v) inside the class holds no (a_c - 1)-clique. Rule (c) covers
    // a_c = 1 classes automatically: the 0-clique always exists, so such a
    // class can never receive a vertex.
    bool admissible(int v, int c) {
        if (classes[c].empty()) {
            int prev = plan.group_prev[c];
            if (prev >= 0 && classes[prev].empty()) return false;
        }
        if (plan.orbit_rest.test(v) && c < assignment[plan.order[0]]) return false;
        if (detail::find_clique_of_size(g.rows(), g.neighbors(v) & classes[c],
                                        inst.a[c] - 1)) {
            ++prunes;
            return false;
        }
        return true;
    }

    void assign(int v, int c) {
        classes[c].set(v);
        assignment[v] = c;
    }
    void unassign(int v, int c) {
        classes[c].reset(v);
        assignment[v] = -1;
    }

    // True iff a free coloring was completed. Returns false on cancellation;
    // callers distinguish that through the stop flag.
    bool run(int pos) {
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        ++nodes;
        if (budget > 0) {
            long long seen = shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (seen > budget)
                throw GuardExceeded("node budget of " + std::to_string(budget) +
                                    " exhausted before reaching a verdict");
        }
        if (pos == g.vertex_count()) return true;
        const int v = plan.order[pos];
        for (int c = 0; c < inst.r(); ++c) {
            if (!admissible(v, c)) continue;
            assign(v, c);
            if (run(pos + 1)) return true;
            unassign(v, c);
        }
        return false;
    }

    Coloring snapshot() const {
        Coloring col(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) col.colors[v] = assignment[v] + 1;
        return col;
    }
};

}  // namespace

ArrowResult arrows(const Graph& g, const ArrowInstance& inst, const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    const int r = inst.r();
    const SearchPlan plan = prepare(g, inst, cfg);

    ArrowResult res;
    res.stats.deterministic = cfg.deterministic;

    std::atomic<long long> node_counter{0};
    std::optional<Coloring> witness;

    int workers = 1;
    if (!cfg.deterministic && n >= 2) {
        workers = cfg.worker_width > 0 ? cfg.worker_width
                                       : static_cast<int>(std::thread::hardware_concurrency());
        workers = std::clamp(workers, 1, r * r);
    }

    if (workers <= 1) {
        Dfs dfs(g, inst, plan);
        dfs.shared_nodes = &node_counter;
        dfs.budget = cfg.node_budget;
        if (dfs.run(0)) witness = dfs.snapshot();
        res.stats.nodes = dfs.nodes;
        res.stats.prunes = dfs.prunes;
    } else {
        // Split the top two levels into (c0, c1) tasks; whoever completes a
        // free coloring first cancels the rest.
        std::atomic<bool> stop{false};
        std::atomic<bool> budget_tripped{false};
        std::atomic<int> next_task{0};
        std::atomic<long long> nodes_sum{0}, prunes_sum{0};
        std::mutex witness_mu;
        const int tasks = r * r;

        auto work = [&]() {
            Dfs dfs(g, inst, plan);
            dfs.stop = &stop;
            dfs.shared_nodes = &node_counter;
            dfs.budget = cfg.node_budget;
            const int v0 = plan.order[0], v1 = plan.order[1];
            try {
                while (!stop.load(std::memory_order_relaxed)) {
                    int t = next_task.fetch_add(1, std::memory_order_relaxed);
                    if (t >= tasks) break;
                    int c0 = t / r, c1 = t % r;
                    if (!dfs.admissible(v0, c0)) continue;
                    dfs.assign(v0, c0);
                    if (dfs.admissible(v1, c1)) {
                        dfs.assign(v1, c1);
                        if (dfs.run(2)) {
                            std::lock_guard<std::mutex> lock(witness_mu);
                            if (!witness) witness = dfs.snapshot();
                            stop.store(true);
                        }
                        dfs.unassign(v1, c1);
                    }
                    dfs.unassign(v0, c0);
                }
            } catch (const GuardExceeded&) {
                budget_tripped.store(true);
                stop.store(true);
            }
            nodes_sum += dfs.nodes;
            prunes_sum += dfs.prunes;
        };

        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();

        res.stats.nodes = nodes_sum.load();
        res.stats.prunes = prunes_sum.load();
        // A witness completed concurrently with a budget trip still counts:
        // not-arrows verdicts stay valid on an incomplete search.
        if (!witness && budget_tripped.load())
            throw GuardExceeded("node budget of " + std::to_string(cfg.node_budget) +
                                " exhausted before reaching a verdict");
    }

    if (witness) {
        if (!is_free_coloring(g, inst, *witness))
            throw std::logic_error("search returned a witness that is not a free coloring");
        res.verdict = Verdict::not_arrows;
        res.witness = std::move(witness);
    } else {
        res.verdict = Verdict::arrows;
    }
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

// Pairwise adjacency checks only; deliberately shares nothing with the
// branch-and-bound solver.
bool naive_extend(const Graph& g, const std::vector<int>& verts, std::size_t start, int k,
                  std::vector<int>& cur) {
    if (k == 0) return true;
    for (std::size_t i = start; i + k <= verts.size(); ++i) {
        int v = verts[i];
        bool ok = true;
        for (int u : cur)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        if (naive_extend(g, verts, i + 1, k - 1, cur)) return true;
        cur.pop_back();
    }
    return false;
}

}  // namespace

ArrowResult arrows_exhaustive(const Graph& g, const ArrowInstance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    const int r = inst.r();
    if (std::pow(static_cast<long double>(r), n) > 1e8L)
        throw GuardExceeded("r^n exceeds the 10^8 enumeration guard");

    ArrowResult res;
    res.stats.deterministic = true;

    std::vector<int> digits(n, 0);  // base-r counter, 0-based colors
    long long examined = 0;
    bool more = true;
    while (more) {
        ++examined;
        bool free_col = true;
        for (int c = 0; c < r && free_col; ++c) {
            std::vector<int> cls;
            for (int v = 0; v < n; ++v)
                if (digits[v] == c) cls.push_back(v);
            std::vector<int> cur;
            if (naive_extend(g, cls, 0, inst.a[c], cur)) free_col = false;
        }
        if (free_col) {
            Coloring col(n);
            for (int v = 0; v < n; ++v) col.colors[v] = digits[v] + 1;
            res.verdict = Verdict::not_arrows;
            res.witness = std::move(col);
            break;
        }
        int pos = 0;
        while (pos < n && ++digits[pos] == r) digits[pos++] = 0;
        more = pos < n;
    }
    res.stats.nodes = examined;
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

bool in_H(const Graph& g, const ArrowInstance& inst, int q, const SearchConfig& cfg) {
    if (clique_number(g).size >= q) return false;
    return arrows(g, inst, cfg).verdict == Verdict::arrows;
}

bool chromatic_exceeds(const Graph& g, int r, const SearchConfig& cfg) {
    if (r < 1) throw InvalidParameter("chromatic_exceeds needs r >= 1");
    return arrows(g, make_instance(std::vector<int>(r, 2)), cfg).verdict == Verdict::arrows;
}

}  // namespace folkman
