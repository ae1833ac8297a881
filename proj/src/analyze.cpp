#include "cwc/analyze.hpp"

#include "cwc/bv_table.hpp"
#include "cwc/errors.hpp"
#include "cwc/kernels.hpp"

namespace cwc {

int min_distance(const Codebook& code) {
    if (code.size() < 2)
        throw parameter_error("minimum distance undefined for a single-word codebook");
    PackedWords pw = PackedWords::pack(code.words);
    const int pairwise = min_pairwise_distance(pw);

    ClosureCheck closure = xor_closure(pw);
    if (closure.closed && !closure.duplicates) {
        std::vector<long long> census = weight_census(pw);
        int min_nonzero = 0;
        for (std::size_t w = 1; w < census.size(); ++w)
            if (census[w] > 0) {
                min_nonzero = static_cast<int>(w);
                break;
            }
        if (min_nonzero != pairwise)
            throw structural_error("linear codebook cross-check failed: min nonzero weight " +
                                   std::to_string(min_nonzero) + " != pairwise minimum " +
                                   std::to_string(pairwise));
    }
    return pairwise;
}

std::map<int, long long> weight_spectrum(const Codebook& code) {
    PackedWords pw = PackedWords::pack(code.words);
    std::vector<long long> census = weight_census(pw);
    std::map<int, long long> spectrum;
    for (std::size_t w = 0; w < census.size(); ++w)
        if (census[w] > 0) spectrum[static_cast<int>(w)] = census[w];
    return spectrum;
}

std::pair<bool, std::optional<int>> is_constant_weight(const Codebook& code) {
    std::map<int, long long> spectrum = weight_spectrum(code);
    spectrum.erase(0);
    if (spectrum.empty()) return {true, std::nullopt};  // only the zero word
    if (spectrum.size() == 1) return {true, spectrum.begin()->first};
    return {false, std::nullopt};
}

bool is_linear(const Codebook& code) {
    PackedWords pw = PackedWords::pack(code.words);
    ClosureCheck closure = xor_closure(pw);
    return closure.closed && !closure.duplicates;
}

CodeReport full_report(const Codebook& code) {
    CodeReport report;
    report.n = code.n;
    report.k = code.k;
    report.d = min_distance(code);
    report.spectrum = weight_spectrum(code);
    auto [cw, cw_value] = is_constant_weight(code);
    report.constant_weight = cw;
    report.constant_weight_value = cw_value;
    report.linear = is_linear(code);
    report.d_bv = bv_lookup(code.n, code.k);
    if (report.d_bv) report.meets_bv = (report.d == *report.d_bv);
    return report;
}

}  // namespace cwc
