#include "cwc/decode.hpp"

#include <climits>
#include <cmath>
#include <random>

#include "cwc/analyze.hpp"
#include "cwc/construct.hpp"
#include "cwc/errors.hpp"

namespace cwc {

DecodeResult ml_decode(const Codebook& code, const Word& received) {
    if (received.length() != code.n)
        throw parameter_error("received word length " + std::to_string(received.length()) +
                              " does not match code length " + std::to_string(code.n));
    if (code.words.empty()) throw parameter_error("empty codebook");

    DecodeResult result;
    int best = INT_MAX;
    std::uint32_t best_index = 0;
    bool tie = false;
    for (std::uint32_t m = 0; m < code.size(); ++m) {
        const int d = distance(received, code.words[m]);
        if (d < best) {
            best = d;
            best_index = m;
            tie = false;
        } else if (d == best) {
            tie = true;
        }
    }
    result.message = best_index;
    result.corrected_errors = best;
    result.tie = tie;
    return result;
}

std::pair<int, bool> majority_decode(const Word& received) {
    if (received.length() < 1) throw parameter_error("majority vote needs at least one bit");
    const int ones = received.weight();
    const int zeros = received.length() - ones;
    if (ones > zeros) return {1, true};
    if (zeros > ones) return {0, true};
    return {0, false};
}

StagedDecoderC2::StagedDecoderC2(const Codebook& u_code, const Codebook& v_code)
    : u_code_(u_code), v_code_(v_code) {
    if (u_code.n != v_code.n)
        throw parameter_error("staged decoder needs equal component lengths, got " +
                              std::to_string(u_code.n) + " and " + std::to_string(v_code.n));
    v_radius_ = (min_distance(v_code) - 1) / 2;
    doubled_u_distance_ = 2 * min_distance(u_code);
}

DecodeResult StagedDecoderC2::decode(const Word& received) const {
    const int half = u_code_.n;
    if (received.length() != 2 * half)
        throw parameter_error("received word length " + std::to_string(received.length()) +
                              " does not match stacked length " + std::to_string(2 * half));

    DecodeResult result;
    const Word r_left = received.slice(0, half);
    const Word r_right = received.slice(half, half);

    // Stage 1: the folded halves equal v + e_L + e_R; bounded-distance decode v.
    const Word folded = r_left ^ r_right;
    std::optional<std::uint32_t> v_index;
    for (std::uint32_t m = 0; m < v_code_.size(); ++m)
        if (distance(folded, v_code_.words[m]) <= v_radius_) {
            v_index = m;  // unique within the packing radius
            break;
        }
    if (!v_index) {
        result.stage_v_ok = false;
        result.stage_u_ok = false;
        return result;
    }

    // Stage 2: strip v, then nearest word of the doubled code {(u,u)}.
    const Word r_right_stripped = r_right ^ v_code_.words[*v_index];
    int best = INT_MAX;
    std::uint32_t best_u = 0;
    bool unique = true;
    for (std::uint32_t m = 0; m < u_code_.size(); ++m) {
        const int d = distance(r_left, u_code_.words[m]) + distance(r_right_stripped, u_code_.words[m]);
        if (d < best) {
            best = d;
            best_u = m;
            unique = true;
        } else if (d == best) {
            unique = false;
        }
    }
    if (!unique || best > doubled_u_distance_ - 1) {
        result.stage_u_ok = false;
        return result;
    }

    result.message = (best_u << v_code_.k) | *v_index;
    result.corrected_errors =
        distance(r_left, u_code_.words[best_u]) +
        distance(r_right, u_code_.words[best_u] ^ v_code_.words[*v_index]);
    return result;
}

DecodeResult staged_decode_c2(const Codebook& u_code, const Codebook& v_code,
                              const Word& received) {
    return StagedDecoderC2(u_code, v_code).decode(received);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr const char* kGeneratorId = "mt19937_64+splitmix64(seed,trial)";

// Deterministic per-trial substream: the engine for trial t depends only on
// (seed, t), never on scheduling.
std::mt19937_64 trial_engine(std::uint64_t seed, long long trial) {
    return std::mt19937_64(splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1)));
}

template <typename DecodeFn>
SimStats run_channel(const Codebook& code, const char* decoder_name, double p, long long trials,
                     std::uint64_t seed, DecodeFn&& decode_one) {
    if (p < 0.0 || p > 0.5) throw parameter_error("flip probability must be in [0, 1/2]");
    if (trials < 1) throw parameter_error("need at least one trial");

    SimStats stats;
    stats.n = code.n;
    stats.k = code.k;
    stats.d = min_distance(code);
    stats.decoder = decoder_name;
    stats.p = p;
    stats.trials = trials;
    stats.seed = seed;
    stats.generator = kGeneratorId;

    // Exact scaling of p by 2^64; flips happen when a raw draw falls below.
    const std::uint64_t threshold =
        p >= 0.5 ? (std::uint64_t{1} << 63) : static_cast<std::uint64_t>(std::ldexp(p, 64));
    const std::uint32_t message_mask = static_cast<std::uint32_t>((std::uint64_t{1} << code.k) - 1);

    long long word_errors = 0, stage1 = 0, stage2 = 0;
#pragma omp parallel for schedule(static) reduction(+ : word_errors, stage1, stage2)
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 eng = trial_engine(seed, t);
        const std::uint32_t message = static_cast<std::uint32_t>(eng()) & message_mask;
        std::vector<std::uint8_t> flips(static_cast<std::size_t>(code.n));
        for (int i = 0; i < code.n; ++i) flips[static_cast<std::size_t>(i)] = (eng() < threshold) ? 1 : 0;
        const Word received = code.words[message] ^ Word::from_bits(flips);
        const DecodeResult result = decode_one(received);
        if (!result.stage_v_ok) ++stage1;
        else if (!result.stage_u_ok) ++stage2;
        if (!result.message || *result.message != message) ++word_errors;
    }
    stats.word_errors = word_errors;
    stats.stage1_failures = stage1;
    stats.stage2_failures = stage2;
    stats.wer = static_cast<double>(word_errors) / static_cast<double>(trials);
    return stats;
}

}  // namespace

SimStats channel_simulate_ml(const Codebook& code, double p, long long trials,
                             std::uint64_t seed) {
    return run_channel(code, "ml", p, trials, seed,
                       [&](const Word& r) { return ml_decode(code, r); });
}

SimStats channel_simulate_staged(const Codebook& code, const Codebook& u_code,
                                 const Codebook& v_code, double p, long long trials,
                                 std::uint64_t seed) {
    const Codebook stacked = build_c2(u_code, v_code);
    if (stacked.n != code.n || stacked.k != code.k || stacked.words != code.words)
        throw parameter_error("codebook does not match the (u, u+v) stack of the given components");
    StagedDecoderC2 decoder(u_code, v_code);
    return run_channel(code, "staged", p, trials, seed,
                       [&](const Word& r) { return decoder.decode(r); });
}

GuaranteeSweep sweep_guarantee_region(const Codebook& u_code, const Codebook& v_code,
                                      int max_weight) {
    const Codebook stacked = build_c2(u_code, v_code);
    StagedDecoderC2 staged(u_code, v_code);
    const int t_v = staged.v_radius();
    const int u_guarantee = staged.doubled_u_distance() / 2 - 1;  // d_u - 1 on the component code
    const int n = stacked.n;

    GuaranteeSweep sweep;

    // All error patterns of weight <= max_weight, by support enumeration.
    std::vector<Word> patterns;
    patterns.push_back(Word::zeros(n));
    std::vector<int> support;
    auto emit = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) return;
        for (int i = start; i < n; ++i) {
            support.push_back(i);
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
            for (int idx : support) bits[static_cast<std::size_t>(idx)] = 1;
            patterns.push_back(Word::from_bits(bits));
            self(self, i + 1, remaining - 1);
            support.pop_back();
        }
    };
    emit(emit, 0, max_weight);

    for (const Word& e : patterns) {
        ErrorPattern pattern{e};
        const int folded_weight = (pattern.left() ^ pattern.right()).weight();
        const int total_weight = e.weight();
        const bool in_region = folded_weight <= t_v && total_weight <= u_guarantee;
        for (std::uint32_t message = 0; message < stacked.size(); ++message) {
            ++sweep.patterns_tested;
            const Word received = stacked.words[message] ^ e;
            const DecodeResult staged_result = staged.decode(received);
            if (!in_region) {
                if (!staged_result.message) ++sweep.staged_failures_outside;
                continue;
            }
            ++sweep.in_region;
            const DecodeResult ml_result = ml_decode(stacked, received);
            if (!staged_result.message || *staged_result.message != message) ++sweep.staged_wrong;
            if (!ml_result.message || *ml_result.message != message) ++sweep.ml_wrong;
            if (!staged_result.message || !ml_result.message ||
                *staged_result.message != *ml_result.message)
                ++sweep.disagreements;
        }
    }
    return sweep;
}

}  // namespace cwc
