#include "folkman/instance.hpp"

#include <algorithm>
#include <string>

namespace folkman {

ArrowInstance make_instance(const std::vector<int>& a, std::optional<int> q) {
    if (a.empty()) throw InvalidParameter("instance tuple must be non-empty");
    for (int ai : a)
        if (ai < 1)
            throw InvalidParameter("instance entries must be positive, got " + std::to_string(ai));
    ArrowInstance inst;
    inst.a = a;
    inst.m = 1;
    for (int ai : a) inst.m += ai - 1;
    inst.p = *std::max_element(a.begin(), a.end());
    if (q) {
        if (*q <= inst.p)
            throw InvalidParameter("target clique bound q=" + std::to_string(*q) +
                                   " is unsatisfiable: needs q > p = " + std::to_string(inst.p));
        inst.q = q;
    }
    return inst;
}

bool existence_check(const ArrowInstance& inst, int q) {
    if (q < 1) throw InvalidParameter("clique bound q must be >= 1");
    return q > inst.p;
}

BoundReport bounds_report(const ArrowInstance& inst) {
    const long long m = inst.m, p = inst.p;
    BoundReport rep;
    rep.upper_main = {m + 3 * p, p >= 3 && m >= p + 2};
    rep.upper_large_m = {m + p * p, m >= 2 * p + 2};
    rep.upper_mid_m = {3 * p * p + p - m * p + 2 * m - 3, p + 3 <= m && m <= 2 * p + 1};
    rep.lower = {m + p + 2, p >= 2};
    return rep;
}

}  // namespace folkman
