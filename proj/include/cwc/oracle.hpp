#pragma once

#include <optional>
#include <vector>

#include "cwc/bv_table.hpp"
#include "cwc/codebook.hpp"
#include "cwc/construct.hpp"

namespace cwc {

/// Outcome of an exhaustive linear-code search at (n, k).
struct SearchResult {
    int n = 0;
    int k = 0;
    int best_d = 0;  ///< 0 when the searched class is empty at (n, k)
    std::optional<Codebook> witness;
    bool restricted_to_constant_weight = false;
    unsigned long long search_space_size = 0;  ///< multiset count C(n + 2^k - 1, n)
};

inline constexpr unsigned long long default_search_budget = 100'000'000ULL;

/// Exhaustive search over linear codes by generator-column multiset: column
/// order never affects the weight distribution, so the 2^(kn) matrix space
/// collapses to C(n + 2^k - 1, n) multisets. Maximizes the minimum nonzero
/// weight; ties resolve to the lexicographically smallest multiset, so the
/// result is independent of the parallel partitioning.
///
/// In the unrestricted class the all-zero column is pruned (it only wastes a
/// coordinate). Under the constant-weight restriction zero columns stay in
/// the enumeration: at lengths where no full-support constant-weight multiset
/// exists, padding a shorter one with dead coordinates is the class optimum.
///
/// Requires k <= 4; refuses with budget_error (carrying the estimate) when
/// the multiset count exceeds `budget`, before any work is done.
SearchResult best_linear_code(int n, int k, bool constant_weight_only,
                              unsigned long long budget = default_search_budget);
SearchResult best_linear_code_serial(int n, int k, bool constant_weight_only,
                                     unsigned long long budget = default_search_budget);

/// Multiset count C(n + 2^k - 1, n), saturating; the budget estimate.
unsigned long long column_multiset_count(int n, int k);

/// Best minimum distance over 4-word codebooks {0, w1, w2, w3} of length n
/// with distinct nonzero words; optionally restricted to the three nonzero
/// words sharing one weight. Exact brute force; practical for n <= 16.
int best_nonlinear_k2(int n, bool constant_weight_only);

struct ChainSearchLimits {
    int max_levels = 6;
    int max_s = 6;
    int max_h = 4;
    long long node_budget = 2'000'000'000;  ///< DFS node cap; exceeded => budget_error
};

struct ChainSearchOutcome {
    std::vector<ChainSpec> witnesses;  ///< canonical (depth-first) order
    long long nodes = 0;               ///< DFS nodes visited
    long long candidates = 0;          ///< chains built and measured
};

/// Enumerates every chain within the limits whose built code measures
/// exactly (target_n, target_d). Pruning uses only the exact closed-form
/// length; every length hit is built in full and measured, so the witness
/// list does not depend on the distance recurrence. Empty list is a valid
/// outcome.
ChainSearchOutcome chain_search(int target_n, int target_d, const ChainSearchLimits& limits = {});
ChainSearchOutcome chain_search_serial(int target_n, int target_d,
                                       const ChainSearchLimits& limits = {});

}  // namespace cwc
