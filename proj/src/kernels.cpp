#include "cwc/kernels.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstring>
#include <numeric>

#include "cwc/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cwc {

PackedWords PackedWords::pack(std::span<const Word> words) {
    PackedWords pw;
    pw.count = words.size();
    if (words.empty()) return pw;
    pw.n = words[0].length();
    pw.stride = (pw.n + 63) / 64;
    pw.bits.assign(pw.count * static_cast<std::size_t>(pw.stride), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].length() != pw.n) throw structural_error("pack: rows of unequal length");
        auto blocks = words[i].blocks();
        std::copy(blocks.begin(), blocks.end(), pw.bits.begin() + i * static_cast<std::size_t>(pw.stride));
    }
    return pw;
}

int PackedWords::row_distance(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = row(i);
    const std::uint64_t* b = row(j);
    int d = 0;
    for (int t = 0; t < stride; ++t) d += std::popcount(a[t] ^ b[t]);
    return d;
}

int PackedWords::row_weight(std::size_t i) const {
    const std::uint64_t* a = row(i);
    int w = 0;
    for (int t = 0; t < stride; ++t) w += std::popcount(a[t]);
    return w;
}

int min_pairwise_distance_serial(const PackedWords& pw) {
    if (pw.count < 2) throw parameter_error("pairwise distance undefined for fewer than two rows");
    int best = INT_MAX;
    for (std::size_t i = 0; i + 1 < pw.count; ++i)
        for (std::size_t j = i + 1; j < pw.count; ++j) best = std::min(best, pw.row_distance(i, j));
    return best;
}

int min_pairwise_distance(const PackedWords& pw) {
    if (pw.count < 2) throw parameter_error("pairwise distance undefined for fewer than two rows");
    const auto m = static_cast<long long>(pw.count);
    int best = INT_MAX;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (long long i = 0; i < m - 1; ++i) {
        int local = INT_MAX;
        for (long long j = i + 1; j < m; ++j)
            local = std::min(local, pw.row_distance(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        best = std::min(best, local);
    }
    return best;
}

std::vector<long long> weight_census_serial(const PackedWords& pw) {
    std::vector<long long> census(static_cast<std::size_t>(pw.n) + 1, 0);
    for (std::size_t i = 0; i < pw.count; ++i) ++census[static_cast<std::size_t>(pw.row_weight(i))];
    return census;
}

std::vector<long long> weight_census(const PackedWords& pw) {
    std::vector<long long> census(static_cast<std::size_t>(pw.n) + 1, 0);
    const auto m = static_cast<long long>(pw.count);
#pragma omp parallel
    {
        std::vector<long long> local(census.size(), 0);
#pragma omp for nowait
        for (long long i = 0; i < m; ++i) ++local[static_cast<std::size_t>(pw.row_weight(static_cast<std::size_t>(i)))];
#pragma omp critical(cwc_census_merge)
        for (std::size_t w = 0; w < census.size(); ++w) census[w] += local[w];
    }
    return census;
}

namespace {

// Sorted view of the rows for membership tests; also detects duplicates.
struct RowIndex {
    const PackedWords* pw;
    std::vector<std::uint32_t> order;
    bool duplicates = false;

    explicit RowIndex(const PackedWords& packed) : pw(&packed) {
        order.resize(packed.count);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return less(packed.row(a), packed.row(b));
        });
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (equal(packed.row(order[i]), packed.row(order[i + 1]))) {
                duplicates = true;
                break;
            }
    }

    bool less(const std::uint64_t* a, const std::uint64_t* b) const {
        for (int t = 0; t < pw->stride; ++t)
            if (a[t] != b[t]) return a[t] < b[t];
        return false;
    }
    bool equal(const std::uint64_t* a, const std::uint64_t* b) const {
        return std::memcmp(a, b, static_cast<std::size_t>(pw->stride) * 8) == 0;
    }

    bool contains(const std::uint64_t* key) const {
        std::size_t lo = 0, hi = order.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (less(pw->row(order[mid]), key))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo < order.size() && equal(pw->row(order[lo]), key);
    }
};

}  // namespace

ClosureCheck xor_closure_serial(const PackedWords& pw) {
    ClosureCheck result;
    if (pw.count == 0) return result;
    RowIndex index(pw);
    result.duplicates = index.duplicates;

    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(pw.stride));
    // x ^ x = 0 must be a member too.
    std::fill(scratch.begin(), scratch.end(), 0);
    bool closed = index.contains(scratch.data());
    for (std::size_t i = 0; closed && i + 1 < pw.count; ++i)
        for (std::size_t j = i + 1; closed && j < pw.count; ++j) {
            const std::uint64_t* a = pw.row(i);
            const std::uint64_t* b = pw.row(j);
            for (int t = 0; t < pw.stride; ++t) scratch[static_cast<std::size_t>(t)] = a[t] ^ b[t];
            closed = index.contains(scratch.data());
        }
    result.closed = closed;
    return result;
}

ClosureCheck xor_closure(const PackedWords& pw) {
    ClosureCheck result;
    if (pw.count == 0) return result;
    RowIndex index(pw);
    result.duplicates = index.duplicates;

    std::vector<std::uint64_t> zero(static_cast<std::size_t>(pw.stride), 0);
    bool closed = index.contains(zero.data());
    const auto m = static_cast<long long>(pw.count);
#pragma omp parallel if (closed)
    {
        std::vector<std::uint64_t> scratch(static_cast<std::size_t>(pw.stride));
#pragma omp for schedule(dynamic, 8)
        for (long long i = 0; i < m - 1; ++i) {
            bool snapshot;
#pragma omp atomic read
            snapshot = closed;
            if (!snapshot) continue;
            bool local = true;
            for (long long j = i + 1; local && j < m; ++j) {
                const std::uint64_t* a = pw.row(static_cast<std::size_t>(i));
                const std::uint64_t* b = pw.row(static_cast<std::size_t>(j));
                for (int t = 0; t < pw.stride; ++t) scratch[static_cast<std::size_t>(t)] = a[t] ^ b[t];
                local = index.contains(scratch.data());
            }
            if (!local) {
#pragma omp atomic write
                closed = false;
            }
        }
    }
    result.closed = closed;
    return result;
}

}  // namespace cwc
