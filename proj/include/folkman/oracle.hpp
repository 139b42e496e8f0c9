#pragma once

#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/gamma.hpp"
#include "folkman/graph.hpp"
#include "folkman/instance.hpp"

namespace folkman {

// Outcome of one independent brute-force check. A failing report always
// carries a counterexample that re-fails when replayed through the base
// modules by hand.
struct CheckReport {
    std::string check_id;
    bool pass = true;
    long long cases_examined = 0;
    std::string counterexample;  // non-empty iff !pass
    std::string notes;           // observations recorded alongside the verdict
    long long search_nodes = 0;  // arrowing nodes spent, where applicable
};

// Ceiling-sum inequality sum(ceil(a_i/2)) >= ceil(n/2) for one tuple,
// n = sum(a_i), together with its exact equality characterization
// (n even: equality iff all a_i even; n odd: iff exactly one a_i odd).
CheckReport verify_prop1(const std::vector<int>& tuple);

// verify_prop1 over every non-increasing tuple with r <= r_max positive
// entries and sum(a_i) <= n_max.
CheckReport verify_prop1_sweep(int n_max, int r_max);

// Path-complement clique arithmetic: cl(comp(P_k)) = ceil(k/2) for k <= k_max,
// plus the deletion identities used downstream: single-vertex deletions on
// even path complements, the pair deletion {v_{2k-2}, v_{2k-1}}, and
// even-position deletions on odd path complements. The pair deletion is
// asserted against cl of the same graph; the variant equating it to cl of the
// one-longer path complement is evaluated and recorded in the notes only.
CheckReport verify_path_complement(int k_max);

// For every proper subset V of the cycle C_{2p+1}'s vertices: the complement
// graph induced on V has clique number >= ceil(|V|/2), with equality exactly
// as predicted by the parities of the component sizes of the cycle induced
// on V. Exhaustive over all 2^(2p+1)-1 proper subsets; requires 2 <= p <= 6.
CheckReport verify_lemma1(int p);

// Deletion identities on cycle-complement induced subgraphs: for every proper
// subset V and every path component (or ordered component pair) matching the
// hypotheses, deleting the named vertices preserves the clique number.
// Components are labeled v_1..v_k starting from the endpoint with the smaller
// cycle index. Exhaustive; requires 2 <= p <= 6.
CheckReport verify_lemmas_2_3(int p);

// Non-increasing tuples with entries in [2, p] and m = p+2; the hypothesis
// family of the Gamma_p arrowing theorem. Entries equal to 1 are omitted by
// construction (they force an empty class and reduce to a shorter tuple).
std::vector<std::vector<int>> theorem1_tuples(int p);

// Asserts arrows(Gamma_p, t) for every tuple in theorem1_tuples(p); requires
// 3 <= p <= 5 (search cost guard). cfg supplies determinism/worker/budget
// settings; its symmetry generators are replaced by Gamma_p's rotation.
CheckReport verify_theorem1(int p, const SearchConfig& cfg = {});

// Builds the witness graph K_{m-p-2} + Gamma_p for the instance and asserts:
// order m+3p, clique number m-2, and membership in H(a_1,...,a_r; m-1).
// Throws OutOfTheoremRange unless p >= 3 and m >= p+2.
CheckReport verify_main(const ArrowInstance& inst, const SearchConfig& cfg = {});

}  // namespace folkman
