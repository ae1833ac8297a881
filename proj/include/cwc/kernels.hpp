#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwc/word.hpp"

namespace cwc {

/// Row-major packed bit matrix: one 64-bit-block row per word. All exhaustive
/// measurement loops run on this layout so the inner kernels are pure
/// xor+popcount over contiguous memory.
struct PackedWords {
    int n = 0;            ///< bits per row
    int stride = 0;       ///< 64-bit blocks per row
    std::size_t count = 0;
    std::vector<std::uint64_t> bits;

    static PackedWords pack(std::span<const Word> words);

    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * static_cast<std::size_t>(stride); }
    int row_distance(std::size_t i, std::size_t j) const;
    int row_weight(std::size_t i) const;
};

// Each kernel comes in two variants: an OpenMP-parallel one (the default
// entry point; falls back to the serial loop when built without OpenMP) and
// a plain serial reference. Results are identical by construction -- the
// reductions are associative -- and the test suite checks that on random
// inputs. The bench tool compares their throughput.

/// Minimum Hamming distance over all unordered pairs of rows (>= 2 rows).
int min_pairwise_distance(const PackedWords& pw);
int min_pairwise_distance_serial(const PackedWords& pw);

/// Exact census of row weights; result[w] = number of rows of weight w.
std::vector<long long> weight_census(const PackedWords& pw);
std::vector<long long> weight_census_serial(const PackedWords& pw);

struct ClosureCheck {
    bool closed = false;      ///< row set closed under xor (incl. zero word present)
    bool duplicates = false;  ///< some row appears more than once
};

/// Checks xor-closure of the row set by testing every unordered pair against
/// a sorted index of the rows.
ClosureCheck xor_closure(const PackedWords& pw);
ClosureCheck xor_closure_serial(const PackedWords& pw);

}  // namespace cwc
