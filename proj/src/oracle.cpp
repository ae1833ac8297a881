#include "cwc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>

#include "cwc/errors.hpp"
#include "cwc/kernels.hpp"

namespace cwc {

unsigned long long column_multiset_count(int n, int k) {
    // C(n + 2^k - 1, n) with saturation.
    const unsigned long long cap = ULLONG_MAX / 2;
    unsigned long long result = 1;
    const int m = (1 << k) - 1;  // choose from m+1 values incl. the zero column
    for (int i = 1; i <= m; ++i) {
        if (result > cap / static_cast<unsigned long long>(n + i)) return cap;
        result = result * static_cast<unsigned long long>(n + i) / static_cast<unsigned long long>(i);
    }
    return result;
}

namespace {

// Column multisets are walked as count vectors over the value list, counts
// of the smallest value chosen first and largest count first; that order
// enumerates the sorted column sequences in ascending lexicographic order,
// so keeping the first strictly-better candidate yields the lex-smallest
// witness among ties.
struct ColumnSearch {
    int n;
    int k;
    int num_messages;            // 2^k - 1
    std::vector<int> values;     // column values in ascending order
    bool constant_weight_only;

    int best_d = 0;
    std::vector<int> best_counts;

    // parity(m & v) for the current column value, per message
    std::vector<std::vector<int>> message_masks;

    explicit ColumnSearch(int n_, int k_, bool cw) : n(n_), k(k_), num_messages((1 << k_) - 1), constant_weight_only(cw) {
        if (cw) values.push_back(0);
        for (int v = 1; v <= num_messages; ++v) values.push_back(v);
        message_masks.resize(values.size());
        for (std::size_t vi = 0; vi < values.size(); ++vi) {
            message_masks[vi].resize(static_cast<std::size_t>(num_messages) + 1, 0);
            for (int m = 1; m <= num_messages; ++m)
                message_masks[vi][static_cast<std::size_t>(m)] = std::popcount(static_cast<unsigned>(m & values[vi])) & 1;
        }
    }

    void consider_leaf(const std::vector<int>& counts, const std::vector<int>& weights) {
        int d = INT_MAX;
        for (int m = 1; m <= num_messages; ++m) d = std::min(d, weights[static_cast<std::size_t>(m)]);
        if (d < 1) return;  // duplicate codewords; not an (n, k) code
        if (constant_weight_only) {
            for (int m = 1; m <= num_messages; ++m)
                if (weights[static_cast<std::size_t>(m)] != d) return;
        }
        if (d > best_d) {
            best_d = d;
            best_counts = counts;
        }
    }

    // Assign counts for values[vi..] with `remaining` columns left.
    void descend(std::size_t vi, int remaining, std::vector<int>& counts, std::vector<int>& weights) {
        if (vi + 1 == values.size()) {
            counts[vi] = remaining;
            for (int m = 1; m <= num_messages; ++m)
                weights[static_cast<std::size_t>(m)] += remaining * message_masks[vi][static_cast<std::size_t>(m)];
            consider_leaf(counts, weights);
            for (int m = 1; m <= num_messages; ++m)
                weights[static_cast<std::size_t>(m)] -= remaining * message_masks[vi][static_cast<std::size_t>(m)];
            counts[vi] = 0;
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            counts[vi] = c;
            for (int m = 1; m <= num_messages; ++m)
                weights[static_cast<std::size_t>(m)] += c * message_masks[vi][static_cast<std::size_t>(m)];
            descend(vi + 1, remaining - c, counts, weights);
            for (int m = 1; m <= num_messages; ++m)
                weights[static_cast<std::size_t>(m)] -= c * message_masks[vi][static_cast<std::size_t>(m)];
        }
        counts[vi] = 0;
    }

    // (d desc, counts lex: larger count at the first differing value wins,
    // i.e. smaller sorted column sequence). Associative, so partition merges
    // are order-independent.
    static bool better(int d_a, const std::vector<int>& a, int d_b, const std::vector<int>& b) {
        if (d_a != d_b) return d_a > d_b;
        return a > b;
    }
};

Codebook codebook_from_counts(int n, int k, const std::vector<int>& values,
                              const std::vector<int>& counts) {
    std::vector<int> columns;
    columns.reserve(static_cast<std::size_t>(n));
    for (std::size_t vi = 0; vi < values.size(); ++vi)
        for (int c = 0; c < counts[vi]; ++c) columns.push_back(values[vi]);

    Codebook code;
    code.n = n;
    code.k = k;
    code.words.reserve(std::size_t{1} << k);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int m = 0; m < (1 << k); ++m) {
        for (int j = 0; j < n; ++j)
            bits[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(m & columns[static_cast<std::size_t>(j)])) & 1);
        code.words.push_back(Word::from_bits(bits));
    }
    return code;
}

SearchResult run_column_search(int n, int k, bool constant_weight_only,
                               unsigned long long budget, bool parallel) {
    if (k < 1 || k > 4) throw parameter_error("column search supports 1 <= k <= 4");
    if (n < 1) throw parameter_error("column search needs n >= 1");
    const unsigned long long estimate = column_multiset_count(n, k);
    if (estimate > budget)
        throw budget_error("column multiset count " + std::to_string(estimate) +
                           " exceeds budget " + std::to_string(budget) + " at (n=" +
                           std::to_string(n) + ", k=" + std::to_string(k) + ")");

    ColumnSearch proto(n, k, constant_weight_only);
    const std::size_t num_values = proto.values.size();

    int best_d = 0;
    std::vector<int> best_counts;

    // Statically partitioned by the count of the first column value.
    const int top = n;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int c0 = top; c0 >= 0; --c0) {
        ColumnSearch local(n, k, constant_weight_only);
        std::vector<int> counts(num_values, 0);
        std::vector<int> weights(static_cast<std::size_t>(local.num_messages) + 1, 0);
        counts[0] = c0;
        for (int m = 1; m <= local.num_messages; ++m)
            weights[static_cast<std::size_t>(m)] += c0 * local.message_masks[0][static_cast<std::size_t>(m)];
        if (num_values == 1) {
            if (c0 == n) local.consider_leaf(counts, weights);
        } else {
            local.descend(1, n - c0, counts, weights);
        }
#pragma omp critical(cwc_column_search_merge)
        {
            if (local.best_d > 0 &&
                (best_counts.empty() ||
                 ColumnSearch::better(local.best_d, local.best_counts, best_d, best_counts)))
            {
                best_d = local.best_d;
                best_counts = local.best_counts;
            }
        }
    }

    SearchResult result;
    result.n = n;
    result.k = k;
    result.restricted_to_constant_weight = constant_weight_only;
    result.search_space_size = estimate;
    result.best_d = best_d;
    if (!best_counts.empty() && best_d > 0)
        result.witness = codebook_from_counts(n, k, proto.values, best_counts);
    return result;
}

}  // namespace

SearchResult best_linear_code(int n, int k, bool constant_weight_only, unsigned long long budget) {
    return run_column_search(n, k, constant_weight_only, budget, true);
}

SearchResult best_linear_code_serial(int n, int k, bool constant_weight_only,
                                     unsigned long long budget) {
    return run_column_search(n, k, constant_weight_only, budget, false);
}

int best_nonlinear_k2(int n, bool constant_weight_only) {
    if (n < 2 || n > 16) throw parameter_error("nonlinear k=2 search supports 2 <= n <= 16");
    const std::uint32_t limit = std::uint32_t{1} << n;
    int best = 0;
    for (std::uint32_t w1 = 1; w1 < limit; ++w1) {
        const int ww1 = std::popcount(w1);
        for (std::uint32_t w2 = w1 + 1; w2 < limit; ++w2) {
            if (constant_weight_only && std::popcount(w2) != ww1) continue;
            for (std::uint32_t w3 = w2 + 1; w3 < limit; ++w3) {
                if (constant_weight_only && std::popcount(w3) != ww1) continue;
                int d = std::min({ww1, std::popcount(w2), std::popcount(w3),
                                  std::popcount(w1 ^ w2), std::popcount(w1 ^ w3),
                                  std::popcount(w2 ^ w3)});
                best = std::max(best, d);
            }
        }
    }
    return best;
}

namespace {

struct ChainSearcher {
    int target_n;
    int target_d;
    ChainSearchLimits limits;
    int stride;
    // reach[r][n] = some continuation of 1..r further levels lands exactly on
    // target_n. Exact on lengths, so pruning never loses a candidate.
    std::vector<std::vector<char>> reach;

    explicit ChainSearcher(int tn, int td, const ChainSearchLimits& lim)
        : target_n(tn), target_d(td), limits(lim), stride((tn + 63) / 64) {
        reach.assign(static_cast<std::size_t>(limits.max_levels) + 1,
                     std::vector<char>(static_cast<std::size_t>(target_n) + 1, 0));
        for (int r = 1; r <= limits.max_levels; ++r)
            for (int n = 1; n <= target_n; ++n) {
                bool ok = false;
                for (int s = 1; s <= limits.max_s && !ok; ++s)
                    for (int h = 0; h <= limits.max_h && !ok; ++h) {
                        long long next = static_cast<long long>(s) * n + h;
                        if (next > target_n) continue;
                        if (next == target_n)
                            ok = true;
                        else if (r >= 2 && reach[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(next)])
                            ok = true;
                    }
                reach[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] = ok;
            }
    }

    struct Shard {
        std::vector<ChainSpec> witnesses;
        long long nodes = 0;
        long long candidates = 0;
        long long charged = 0;  ///< nodes already folded into the shared budget pool
        // Codebook buffer per depth: 2^(depth+1) rows of `stride` blocks. The
        // DFS rebuilds only the child level, never the whole chain.
        std::vector<std::vector<std::uint64_t>> rows;
    };

    // Fold this shard's uncharged work into the shared pool; the refusal
    // verdict depends only on the total node count, not on scheduling.
    void charge(Shard& shard, std::atomic<long long>& node_pool) const {
        const long long delta = shard.nodes - shard.charged;
        shard.charged = shard.nodes;
        if (node_pool.fetch_add(delta) + delta > limits.node_budget)
            throw budget_error("chain search exceeded node budget " +
                               std::to_string(limits.node_budget));
    }

    void init_shard(Shard& shard) const {
        shard.rows.resize(static_cast<std::size_t>(limits.max_levels) + 1);
        for (int depth = 0; depth <= limits.max_levels; ++depth)
            shard.rows[static_cast<std::size_t>(depth)].assign(
                (std::size_t{2} << depth) * static_cast<std::size_t>(stride), 0);
        // depth 0: the base code {0, 1}
        shard.rows[0][static_cast<std::size_t>(stride)] = 1;
    }

    void append_bits(std::uint64_t* dst, int at, const std::uint64_t* src, int len) const {
        const int offset = at & 63;
        const std::size_t base = static_cast<std::size_t>(at) >> 6;
        const int blocks = (len + 63) / 64;
        const std::size_t row_blocks = static_cast<std::size_t>(stride);
        for (int j = 0; j < blocks; ++j) {
            dst[base + static_cast<std::size_t>(j)] |= src[j] << offset;
            if (offset != 0 && base + static_cast<std::size_t>(j) + 1 < row_blocks)
                dst[base + static_cast<std::size_t>(j) + 1] |= src[j] >> (64 - offset);
        }
    }

    // Builds the child codebook (parent extended by one level) in-place.
    void build_child(Shard& shard, int depth, int parent_n, std::size_t parent_count,
                     const LevelSpec& level) const {
        const int J = level.b * parent_n + level.h;
        const std::uint64_t* parent = shard.rows[static_cast<std::size_t>(depth)].data();
        std::vector<std::uint64_t>& child = shard.rows[static_cast<std::size_t>(depth) + 1];
        std::fill(child.begin(), child.end(), 0);
        const int mask_start = level.a * parent_n;
        for (std::size_t i = 0; i < parent_count; ++i) {
            const std::uint64_t* c = parent + i * static_cast<std::size_t>(stride);
            std::uint64_t* out = child.data() + 2 * i * static_cast<std::size_t>(stride);
            for (int copy = 0; copy < level.s; ++copy) append_bits(out, copy * parent_n, c, parent_n);
            // sibling row: same word with the all-ones mask on the last J bits
            std::uint64_t* out1 = out + stride;
            for (int t = 0; t < stride; ++t) out1[t] = out[t];
            for (int bit = mask_start; bit < mask_start + J; ++bit)
                out1[static_cast<std::size_t>(bit) >> 6] ^= std::uint64_t{1} << (bit & 63);
        }
    }

    // The level transform is GF(2)-linear in (message, mask bit), so the
    // pairwise minimum distance equals the minimum weight over rows 1..
    // (collisions show up as zero-weight rows).
    int measured_distance(const Shard& shard, int depth, std::size_t count) const {
        const std::vector<std::uint64_t>& rows = shard.rows[static_cast<std::size_t>(depth)];
        int min_weight = INT_MAX;
        for (std::size_t i = 1; i < count; ++i) {
            int w = 0;
            for (int t = 0; t < stride; ++t)
                w += std::popcount(rows[i * static_cast<std::size_t>(stride) + static_cast<std::size_t>(t)]);
            min_weight = std::min(min_weight, w);
        }
        return min_weight;
    }

    // Extending a chain multiplies its measured distance by at most the same
    // copy product that multiplies its length (extend the minimizing pair
    // with equal mask bits at every future level), so a subtree is dead once
    // d * target_n < target_d * n.
    bool viable(const Shard& shard, int depth, std::size_t count, long long n) const {
        const int d = measured_distance(shard, depth, count);
        return static_cast<long long>(d) * target_n >= static_cast<long long>(target_d) * n;
    }

    // Witnesses additionally get a full pairwise re-check before being
    // reported.
    bool measure_hit(const Shard& shard, int depth, std::size_t count) const {
        const std::vector<std::uint64_t>& rows = shard.rows[static_cast<std::size_t>(depth)];
        if (measured_distance(shard, depth, count) != target_d) return false;
        int pairwise = INT_MAX;
        for (std::size_t i = 0; i + 1 < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j) {
                int w = 0;
                for (int t = 0; t < stride; ++t)
                    w += std::popcount(rows[i * static_cast<std::size_t>(stride) + static_cast<std::size_t>(t)] ^
                                       rows[j * static_cast<std::size_t>(stride) + static_cast<std::size_t>(t)]);
                pairwise = std::min(pairwise, w);
            }
        return pairwise == target_d;
    }

    void dfs(int n, int depth, std::vector<LevelSpec>& prefix, Shard& shard,
             std::atomic<long long>& node_pool) const {
        if (shard.nodes - shard.charged >= 4096) charge(shard, node_pool);
        const std::size_t count = std::size_t{2} << depth;
        for (int s = 1; s <= limits.max_s; ++s) {
            for (int h = 0; h <= limits.max_h; ++h) {
                const long long next = static_cast<long long>(s) * n + h;
                if (next > target_n) continue;
                const bool hit = (next == target_n);
                const bool can_go_deeper =
                    depth + 1 < limits.max_levels &&
                    reach[static_cast<std::size_t>(limits.max_levels - depth - 1)]
                         [static_cast<std::size_t>(next)];
                if (!hit && !can_go_deeper) continue;
                for (int a = 0; a <= s; ++a) {
                    const int b = s - a;
                    if (static_cast<long long>(b) * n + h < 1) continue;
                    ++shard.nodes;
                    const LevelSpec level{s, h, a, b};
                    prefix.push_back(level);
                    build_child(shard, depth, n, count, level);
                    if (hit) {
                        ++shard.candidates;
                        if (measure_hit(shard, depth + 1, count * 2))
                            shard.witnesses.push_back(ChainSpec{prefix});
                    }
                    if (can_go_deeper && viable(shard, depth + 1, count * 2, next))
                        dfs(static_cast<int>(next), depth + 1, prefix, shard, node_pool);
                    prefix.pop_back();
                }
            }
        }
    }
};

ChainSearchOutcome run_chain_search(int target_n, int target_d, const ChainSearchLimits& limits,
                                    bool parallel) {
    if (target_n < 1 || target_n > Word::max_len)
        throw parameter_error("chain search target length out of range");
    if (target_d < 0) throw parameter_error("chain search target distance must be >= 0");
    if (limits.max_levels < 1 || limits.max_s < 1 || limits.max_h < 0)
        throw parameter_error("chain search limits out of range");

    ChainSearcher searcher(target_n, target_d, limits);

    // First-level choices in canonical order; each is an independent subtree.
    struct FirstLevel {
        LevelSpec level;
        int next_n;
        bool hit;
        bool deeper;
    };
    std::vector<FirstLevel> tops;
    for (int s = 1; s <= limits.max_s; ++s)
        for (int h = 0; h <= limits.max_h; ++h) {
            const long long next = static_cast<long long>(s) + h;  // base length is 1
            if (next > target_n) continue;
            const bool hit = (next == target_n);
            const bool deeper = limits.max_levels >= 2 &&
                                searcher.reach[static_cast<std::size_t>(limits.max_levels - 1)]
                                              [static_cast<std::size_t>(next)];
            if (!hit && !deeper) continue;
            for (int a = 0; a <= s; ++a) {
                const int b = s - a;
                if (b + h < 1) continue;
                tops.push_back({LevelSpec{s, h, a, b}, static_cast<int>(next), hit, deeper});
            }
        }

    std::vector<ChainSearcher::Shard> shards(tops.size());
    std::atomic<long long> node_pool{0};
    std::atomic<bool> over_budget{false};

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t t = 0; t < tops.size(); ++t) {
        if (over_budget.load(std::memory_order_relaxed)) continue;
        try {
            ChainSearcher::Shard& shard = shards[t];
            searcher.init_shard(shard);
            std::vector<LevelSpec> prefix{tops[t].level};
            ++shard.nodes;
            searcher.build_child(shard, 0, 1, 2, tops[t].level);
            if (tops[t].hit) {
                ++shard.candidates;
                if (searcher.measure_hit(shard, 1, 4)) shard.witnesses.push_back(ChainSpec{prefix});
            }
            if (tops[t].deeper && searcher.viable(shard, 1, 4, tops[t].next_n))
                searcher.dfs(tops[t].next_n, 1, prefix, shard, node_pool);
            searcher.charge(shard, node_pool);
        } catch (const budget_error&) {
            over_budget.store(true, std::memory_order_relaxed);
        }
    }
    if (over_budget.load())
        throw budget_error("chain search exceeded node budget " +
                           std::to_string(limits.node_budget));

    // Merge in subtree order; the result is independent of scheduling.
    ChainSearchOutcome outcome;
    for (const auto& shard : shards) {
        outcome.nodes += shard.nodes;
        outcome.candidates += shard.candidates;
        outcome.witnesses.insert(outcome.witnesses.end(), shard.witnesses.begin(),
                                 shard.witnesses.end());
    }
    return outcome;
}

}  // namespace

ChainSearchOutcome chain_search(int target_n, int target_d, const ChainSearchLimits& limits) {
    return run_chain_search(target_n, target_d, limits, true);
}

ChainSearchOutcome chain_search_serial(int target_n, int target_d,
                                       const ChainSearchLimits& limits) {
    return run_chain_search(target_n, target_d, limits, false);
}

}  // namespace cwc
