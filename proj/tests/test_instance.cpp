#include <doctest.h>

#include "folkman/instance.hpp"

using namespace folkman;

TEST_CASE("make_instance computes m and p") {
    auto i1 = make_instance({3, 3});
    CHECK(i1.m == 5);
    CHECK(i1.p == 3);
    CHECK(i1.r() == 2);
    CHECK(!i1.q.has_value());

    auto i2 = make_instance({2, 2, 3});
    CHECK(i2.m == 5);
    CHECK(i2.p == 3);

    auto i3 = make_instance({3, 3, 2});
    CHECK(i3.m == 6);
    CHECK(i3.p == 3);

    auto i4 = make_instance({4, 3});
    CHECK(i4.m == 6);
    CHECK(i4.p == 4);

    auto i5 = make_instance({1, 1, 5});
    CHECK(i5.m == 5);
    CHECK(i5.p == 5);

    auto i6 = make_instance({3, 3}, 4);
    CHECK(i6.q == 4);
    CHECK(i6.a == std::vector<int>{3, 3});  // caller's order kept
}

TEST_CASE("make_instance rejects bad tuples") {
    CHECK_THROWS_AS(make_instance({}), InvalidParameter);
    CHECK_THROWS_AS(make_instance({3, 0}), InvalidParameter);
    CHECK_THROWS_AS(make_instance({-2}), InvalidParameter);
    // q <= p is unsatisfiable: anything arrowing the tuple contains K_p
    CHECK_THROWS_AS(make_instance({3, 3}, 3), InvalidParameter);
    CHECK_THROWS_AS(make_instance({3, 3}, 2), InvalidParameter);
    CHECK_NOTHROW(make_instance({3, 3}, 4));
}

TEST_CASE("existence_check") {
    auto inst = make_instance({3, 3});
    CHECK(existence_check(inst, 4));
    CHECK(existence_check(inst, 100));
    CHECK(!existence_check(inst, 3));
    CHECK(!existence_check(inst, 1));
    CHECK_THROWS_AS(existence_check(inst, 0), InvalidParameter);
    CHECK_THROWS_AS(existence_check(inst, -5), InvalidParameter);
}

TEST_CASE("bounds for (3,3)") {
    auto rep = bounds_report(make_instance({3, 3}));
    CHECK(rep.upper_main.valid);
    CHECK(rep.upper_main.value == 14);  // m + 3p = 5 + 9
    CHECK(rep.lower.valid);
    CHECK(rep.lower.value == 10);  // m + p + 2
    CHECK(!rep.upper_large_m.valid);  // needs m >= 2p+2 = 8
    CHECK(!rep.upper_mid_m.valid);    // needs m >= p+3 = 6
}

TEST_CASE("bounds for (3,3,3)") {
    auto rep = bounds_report(make_instance({3, 3, 3}));  // m = 7, p = 3
    CHECK(rep.upper_main.value == 16);
    CHECK(rep.upper_main.valid);
    CHECK(rep.upper_mid_m.valid);  // p+3 = 6 <= 7 <= 2p+1 = 7
    CHECK(rep.upper_mid_m.value == 3 * 9 + 3 - 7 * 3 + 2 * 7 - 3);  // 20
    CHECK(rep.upper_mid_m.value == 20);
    CHECK(!rep.upper_large_m.valid);  // needs m >= 8
    CHECK(rep.lower.value == 12);
}

TEST_CASE("bounds validity windows") {
    auto r22 = bounds_report(make_instance({2, 2}));  // m = 3, p = 2
    CHECK(!r22.upper_main.valid);                     // needs p >= 3
    CHECK(r22.lower.valid);
    CHECK(r22.lower.value == 7);

    // m = 8 = 2p+2 with p = 3: the large-m bound switches on
    auto r3333 = bounds_report(make_instance({3, 3, 3, 2}));  // m = 8
    CHECK(r3333.upper_large_m.valid);
    CHECK(r3333.upper_large_m.value == 8 + 9);
    CHECK(!r3333.upper_mid_m.valid);  // m > 2p+1

    auto r1 = bounds_report(make_instance({1}));  // m = 1, p = 1
    CHECK(!r1.upper_main.valid);
    CHECK(!r1.lower.valid);  // lower needs p >= 2
}

TEST_CASE("large-m refinement never beats the main bound inside its window") {
    // For m >= 2p+2 the main bound m+3p is the weaker (larger or equal) one
    // exactly when p <= 3; sweep tuples [p, 2, 2, ...] and check the windows
    // agree with the formulas rather than each other.
    for (int p = 3; p <= 8; ++p) {
        for (int m = p + 2; m <= 3 * p + 4; ++m) {
            std::vector<int> t{p};
            for (int k = 0; k < m - p; ++k) t.push_back(2);
            auto inst = make_instance(t);
            REQUIRE(inst.m == m);
            REQUIRE(inst.p == p);
            auto rep = bounds_report(inst);
            CHECK(rep.upper_main.valid);
            CHECK(rep.upper_main.value == m + 3 * p);
            CHECK(rep.upper_large_m.valid == (m >= 2 * p + 2));
            if (rep.upper_large_m.valid) CHECK(rep.upper_large_m.value == m + p * p);
            CHECK(rep.upper_mid_m.valid == (p + 3 <= m && m <= 2 * p + 1));
            if (rep.upper_mid_m.valid)
                CHECK(rep.upper_mid_m.value == 3LL * p * p + p - 1LL * m * p + 2 * m - 3);
            CHECK(rep.lower.value == m + p + 2);
            // every upper bound must dominate the lower bound where both hold
            if (rep.upper_mid_m.valid) CHECK(rep.upper_mid_m.value >= rep.lower.value);
            CHECK(rep.upper_main.value >= rep.lower.value);
        }
    }
}
