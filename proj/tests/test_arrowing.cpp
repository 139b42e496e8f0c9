#include <doctest.h>

#include "brute.hpp"
#include "folkman/arrowing.hpp"
#include "folkman/gamma.hpp"

using namespace folkman;

namespace {

SearchConfig det() {
    SearchConfig cfg;
    cfg.deterministic = true;
    return cfg;
}

}  // namespace

TEST_CASE("coloring basics") {
    Coloring c(4);
    CHECK(!c.fully_assigned());
    c.colors = {1, 2, 1, 2};
    CHECK(c.fully_assigned());
    CHECK(c.color_class(1) == VertexSet::of({0, 2}));
    CHECK(c.color_class(2) == VertexSet::of({1, 3}));
    CHECK(c.color_class(3).empty());
}

TEST_CASE("is_free_coloring") {
    Graph c5 = Graph::cycle(5);
    auto inst = make_instance({2, 2});
    Coloring c(5);
    c.colors = {1, 2, 1, 2, 1};  // vertices 4 and 0 are adjacent, both color 1
    CHECK(!is_free_coloring(c5, inst, c));
    c.colors = {1, 2, 1, 2, 3};
    CHECK_THROWS_AS(is_free_coloring(c5, inst, c), InvalidParameter);  // color 3 > r
    c.colors = {1, 2, 1, 2, 0};
    CHECK_THROWS_AS(is_free_coloring(c5, inst, c), InvalidParameter);  // unassigned
    c.colors = {1, 2, 1, 2};
    CHECK_THROWS_AS(is_free_coloring(c5, inst, c), InvalidParameter);  // size mismatch

    Graph p4 = Graph::path(4);
    Coloring good(4);
    good.colors = {1, 2, 1, 2};
    CHECK(is_free_coloring(p4, inst, good));

    // thresholds 1 demand empty classes
    Coloring one(2);
    one.colors = {2, 2};
    CHECK(is_free_coloring(Graph(2), make_instance({1, 2}), one));
    one.colors = {1, 2};
    CHECK(!is_free_coloring(Graph(2), make_instance({1, 2}), one));
}

TEST_CASE("complete graph verdicts") {
    auto inst33 = make_instance({3, 3});
    // K5: any 2-part split has a side with >= 3 vertices, i.e. a K_3
    auto r5 = arrows(Graph::complete(5), inst33, det());
    CHECK(r5.verdict == Verdict::arrows);
    CHECK(!r5.witness.has_value());
    CHECK(r5.stats.deterministic);
    CHECK(r5.stats.nodes > 0);

    // K4 splits 2+2
    auto r4 = arrows(Graph::complete(4), inst33, det());
    CHECK(r4.verdict == Verdict::not_arrows);
    REQUIRE(r4.witness.has_value());
    CHECK(is_free_coloring(Graph::complete(4), inst33, *r4.witness));
    CHECK(r4.witness->color_class(1).count() == 2);
    CHECK(r4.witness->color_class(2).count() == 2);
}

TEST_CASE("odd cycles arrow (2,2), even ones do not") {
    auto inst22 = make_instance({2, 2});
    CHECK(arrows(Graph::cycle(5), inst22, det()).verdict == Verdict::arrows);
    CHECK(arrows(Graph::cycle(7), inst22, det()).verdict == Verdict::arrows);

    auto r6 = arrows(Graph::cycle(6), inst22, det());
    CHECK(r6.verdict == Verdict::not_arrows);
    REQUIRE(r6.witness.has_value());
    // a free coloring for (2,2) is exactly a proper 2-coloring
    for (int v = 0; v < 6; ++v)
        CHECK(r6.witness->colors[v] != r6.witness->colors[(v + 1) % 6]);

    CHECK(arrows(Graph::path(3), inst22, det()).verdict == Verdict::not_arrows);
}

TEST_CASE("thresholds of 1 and degenerate orders") {
    // class with a_i = 1 must stay empty, so K2 -> (1,2) but the edgeless
    // 2-vertex graph does not
    CHECK(arrows(Graph::complete(2), make_instance({1, 2}), det()).verdict == Verdict::arrows);
    CHECK(arrows(Graph(2), make_instance({1, 2}), det()).verdict == Verdict::not_arrows);
    // (1,1) forces every class empty: impossible once a vertex exists
    CHECK(arrows(Graph(1), make_instance({1, 1}), det()).verdict == Verdict::arrows);
    // the empty graph admits the empty coloring, which is free
    CHECK(arrows(Graph(0), make_instance({2, 2}), det()).verdict == Verdict::not_arrows);
    CHECK(arrows(Graph(0), make_instance({1}), det()).verdict == Verdict::not_arrows);
}

TEST_CASE("agreement with the exhaustive oracle") {
    brute::Rng rng(314159);
    int arrows_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below(7);  // 1..7
        Graph g = brute::random_graph(n, 0.3 + 0.06 * rng.below(8), rng);
        std::vector<int> t;
        int r = 2 + rng.below(2);
        for (int i = 0; i < r; ++i) t.push_back(1 + rng.below(3));
        auto inst = make_instance(t);
        CAPTURE(trial);
        CAPTURE(n);

        auto fast = arrows(g, inst, det());
        auto slow = arrows_exhaustive(g, inst);
        CHECK(fast.verdict == slow.verdict);
        if (fast.verdict == Verdict::not_arrows) {
            REQUIRE(fast.witness.has_value());
            CHECK(is_free_coloring(g, inst, *fast.witness));
            REQUIRE(slow.witness.has_value());
            CHECK(is_free_coloring(g, inst, *slow.witness));
        } else {
            ++arrows_seen;
        }
    }
    CHECK(arrows_seen > 0);  // the sample exercised both verdicts
}

TEST_CASE("verdict is configuration independent") {
    auto gm = build_gamma(3);
    auto inst = make_instance({2, 2, 3});

    SearchConfig base = det();
    SearchConfig with_sym = det();
    with_sym.symmetry_generators = {gm.sigma};
    SearchConfig asc = det();
    asc.order = OrderPolicy::index_ascending;
    SearchConfig degasc = det();
    degasc.order = OrderPolicy::degree_ascending;
    SearchConfig par;  // parallel, default width
    par.symmetry_generators = {gm.sigma};

    for (const auto& cfg : {base, with_sym, asc, degasc, par})
        CHECK(arrows(gm.graph, inst, cfg).verdict == Verdict::arrows);

    // same sweep on a not-arrows input: witnesses may differ, validity may not
    Graph c9 = Graph::cycle(9);
    auto inst23 = make_instance({2, 3});
    SearchConfig par_plain;
    for (const auto& cfg : {base, asc, degasc, par_plain}) {
        auto res = arrows(c9, inst23, cfg);
        CHECK(res.verdict == Verdict::not_arrows);
        REQUIRE(res.witness.has_value());
        CHECK(is_free_coloring(c9, inst23, *res.witness));
    }
}

TEST_CASE("explicit vertex order") {
    SearchConfig cfg = det();
    cfg.order = OrderPolicy::given;
    cfg.given_order = {4, 3, 2, 1, 0};
    CHECK(arrows(Graph::cycle(5), make_instance({2, 2}), cfg).verdict == Verdict::arrows);
    cfg.given_order = {0, 1, 2};  // wrong length
    CHECK_THROWS_AS(arrows(Graph::cycle(5), make_instance({2, 2}), cfg), InvalidParameter);
    cfg.given_order = {0, 0, 2, 3, 4};  // not a permutation
    CHECK_THROWS_AS(arrows(Graph::cycle(5), make_instance({2, 2}), cfg), InvalidParameter);
}

TEST_CASE("bad symmetry generators are rejected") {
    SearchConfig cfg = det();
    cfg.symmetry_generators = {VertexPermutation({1, 0, 2, 3, 4})};  // not an automorphism of C5
    CHECK_THROWS_AS(arrows(Graph::cycle(5), make_instance({2, 2}), cfg), InvalidParameter);
    cfg.symmetry_generators = {VertexPermutation({0, 1})};  // wrong size
    CHECK_THROWS_AS(arrows(Graph::cycle(5), make_instance({2, 2}), cfg), InvalidParameter);
}

TEST_CASE("tuple order does not change the verdict") {
    auto gm = build_gamma(3);
    for (auto t : {std::vector<int>{2, 2, 3}, {2, 3, 2}, {3, 2, 2}})
        CHECK(arrows(gm.graph, make_instance(t), det()).verdict == Verdict::arrows);
    // C5 is triangle-free, so dumping everything into the K3-bounded class is
    // free regardless of which slot carries threshold 3
    Graph c5 = Graph::cycle(5);
    for (auto t : {std::vector<int>{2, 3}, {3, 2}}) {
        auto res = arrows(c5, make_instance(t), det());
        CHECK(res.verdict == Verdict::not_arrows);
        REQUIRE(res.witness.has_value());
        CHECK(is_free_coloring(c5, make_instance(t), *res.witness));
    }
}

TEST_CASE("swapping equal-threshold classes keeps a witness free") {
    Graph k4 = Graph::complete(4);
    auto inst = make_instance({3, 3});
    auto res = arrows(k4, inst, det());
    REQUIRE(res.witness.has_value());
    Coloring swapped = *res.witness;
    for (int& c : swapped.colors) c = c == 1 ? 2 : 1;
    CHECK(is_free_coloring(k4, inst, swapped));
}

TEST_CASE("node budget trips as GuardExceeded") {
    auto gm = build_gamma(4);
    auto inst = make_instance({4, 3});
    SearchConfig cfg = det();
    cfg.node_budget = 10;
    CHECK_THROWS_AS(arrows(gm.graph, inst, cfg), GuardExceeded);
    // parallel path honors the budget too
    SearchConfig par;
    par.node_budget = 10;
    CHECK_THROWS_AS(arrows(gm.graph, inst, par), GuardExceeded);
    // a found witness beats the budget: searching an easy not-arrows instance
    cfg.node_budget = 1000000;
    CHECK(arrows(Graph::cycle(6), make_instance({2, 2}), cfg).verdict == Verdict::not_arrows);
}

TEST_CASE("exhaustive oracle guard") {
    CHECK_THROWS_AS(arrows_exhaustive(Graph(27), make_instance({2, 2})), GuardExceeded);
    CHECK_NOTHROW(arrows_exhaustive(Graph(10), make_instance({2, 2})));
}

TEST_CASE("in_H") {
    auto gm = build_gamma(3);
    auto inst = make_instance({3, 3});
    CHECK(in_H(gm.graph, inst, 4, det()));
    CHECK(!in_H(gm.graph, inst, 3, det()));  // cl = 3 is not < 3
    CHECK(in_H(Graph::complete(6), inst, 7, det()));
    CHECK(!in_H(Graph::complete(6), inst, 6, det()));
    CHECK(!in_H(Graph::complete(4), inst, 5, det()));  // does not arrow at all
}

TEST_CASE("chromatic_exceeds") {
    CHECK(chromatic_exceeds(Graph::cycle(5), 2, det()));
    CHECK(!chromatic_exceeds(Graph::cycle(5), 3, det()));
    CHECK(!chromatic_exceeds(Graph::cycle(6), 2, det()));
    CHECK(chromatic_exceeds(Graph::cycle(6), 1, det()));
    CHECK(chromatic_exceeds(Graph::complete(4), 3, det()));
    CHECK(!chromatic_exceeds(Graph(5), 1, det()));
    CHECK_THROWS_AS(chromatic_exceeds(Graph::cycle(5), 0, det()), InvalidParameter);
}
