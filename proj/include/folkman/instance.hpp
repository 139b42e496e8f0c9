#pragma once

#include <optional>
#include <vector>

#include "folkman/errors.hpp"

namespace folkman {

// An arrowing instance (a_1,...,a_r) with the derived parameters
//   m = sum(a_i - 1) + 1,   p = max(a_i)
// and an optional target clique bound q. Tuple order is preserved so that
// certificates echo the caller's input, even though the arrowing relation
// itself is permutation-invariant.
struct ArrowInstance {
    std::vector<int> a;
    int m = 0;
    int p = 0;
    std::optional<int> q;

    int r() const { return static_cast<int>(a.size()); }
    bool operator==(const ArrowInstance&) const = default;
};

// Validates the tuple and computes m, p. Throws InvalidParameter on an empty
// tuple, any a_i < 1, or a target q that no graph can meet (q <= p: any graph
// arrowing the tuple contains K_p).
ArrowInstance make_instance(const std::vector<int>& a, std::optional<int> q = std::nullopt);

// True iff a graph with clique number < q arrowing the tuple can exist,
// i.e. q > p. Throws InvalidParameter if q < 1.
bool existence_check(const ArrowInstance& inst, int q);

struct BoundEntry {
    long long value = 0;
    bool valid = false;
};

// The published bounds on the smallest order of a graph in H(a_1,...,a_r; m-1),
// each with its validity window:
//   upper_main    m + 3p          (p >= 3 and m >= p+2)
//   upper_large_m m + p^2         (m >= 2p+2)
//   upper_mid_m   3p^2+p-mp+2m-3  (p+3 <= m <= 2p+1)
//   lower         m + p + 2       (p >= 2)
struct BoundReport {
    BoundEntry upper_main;
    BoundEntry upper_large_m;
    BoundEntry upper_mid_m;
    BoundEntry lower;
};

BoundReport bounds_report(const ArrowInstance& inst);

}  // namespace folkman
