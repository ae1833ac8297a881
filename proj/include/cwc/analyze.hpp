#pragma once

#include <map>
#include <optional>

#include "cwc/codebook.hpp"

namespace cwc {

/// Everything the enumeration pass measures about one codebook. Measured
/// values are authoritative; closed-form predictions are cross-checks only.
struct CodeReport {
    int n = 0;
    int k = 0;
    int d = 0;
    std::map<int, long long> spectrum;  ///< weight -> codeword count
    bool constant_weight = false;
    std::optional<int> constant_weight_value;  ///< absent when not constant or only the zero word exists
    bool linear = false;
    std::optional<int> d_bv;        ///< present when (n, k) is in the bundled table
    std::optional<bool> meets_bv;   ///< d == d_bv
};

/// Minimum pairwise Hamming distance over all unordered word pairs. When the
/// word set is xor-closed (verified, never assumed) the minimum nonzero
/// weight is computed as well and cross-checked against the pairwise value.
/// Throws parameter_error for single-word codebooks.
int min_distance(const Codebook& code);

/// Exact census of codeword weights.
std::map<int, long long> weight_spectrum(const Codebook& code);

/// True iff all nonzero words share one weight (vacuously true when only the
/// zero word exists); second member is that weight when it exists.
std::pair<bool, std::optional<int>> is_constant_weight(const Codebook& code);

/// True iff the words are pairwise distinct and the set is closed under xor.
/// (A codebook with repeated words is not an (n, k) linear code even when
/// its word set happens to be a subspace.)
bool is_linear(const Codebook& code);

/// Aggregates the measurements above plus the bundled-table comparison.
CodeReport full_report(const Codebook& code);

}  // namespace cwc
