#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cwc/codebook.hpp"

namespace cwc {

/// Outcome of one decoding attempt. `message` is present iff decoding
/// succeeded (always, for the maximum-likelihood decoder). Stage flags apply
/// to the two-stage decoder; the ML decoder leaves them true.
struct DecodeResult {
    std::optional<std::uint32_t> message;
    bool stage_v_ok = true;
    bool stage_u_ok = true;
    int corrected_errors = 0;
    bool tie = false;  ///< ML only: minimum was not unique (lowest index returned)
};

/// An error vector on a two-block code, with its structural halves.
struct ErrorPattern {
    Word e;

    Word left() const { return e.slice(0, e.length() / 2); }
    Word right() const { return e.slice(e.length() / 2, e.length() - e.length() / 2); }
};

/// Nearest-codeword decoding. Ties break to the smallest message index and
/// are flagged. corrected_errors is the distance to the chosen codeword.
DecodeResult ml_decode(const Codebook& code, const Word& received);

/// Majority vote over all bits: the bounded-distance decoder for {0^J, 1^J}.
/// Succeeds exactly when the error weight is <= floor((J-1)/2); an exact tie
/// (even J) reports ok=false with bit 0 by convention.
std::pair<int, bool> majority_decode(const Word& received);

/// Two-stage decoder for a (u, u+v) codebook, precomputing component-code
/// radii once. Stage 1 folds the halves (r_L + r_R = v + e_L + e_R) and
/// bounded-distance decodes v within floor((d_v - 1)/2). Stage 2 strips v
/// from the right half and picks the nearest word of the doubled code
/// {(u,u)}; it reports success iff that nearest word is unique within
/// 2*d_u - 1 combined errors. Correct decoding is guaranteed up to combined
/// weight d_u - 1 (half the doubled code's distance); the test suite sweeps
/// that region exhaustively.
class StagedDecoderC2 {
public:
    StagedDecoderC2(const Codebook& u_code, const Codebook& v_code);

    DecodeResult decode(const Word& received) const;

    int v_radius() const noexcept { return v_radius_; }
    int doubled_u_distance() const noexcept { return doubled_u_distance_; }

private:
    const Codebook u_code_;
    const Codebook v_code_;
    int v_radius_;
    int doubled_u_distance_;
};

/// One-shot wrapper around StagedDecoderC2.
DecodeResult staged_decode_c2(const Codebook& u_code, const Codebook& v_code,
                              const Word& received);

enum class DecoderKind { ml, staged };

/// Result of a seeded binary-symmetric-channel run.
struct SimStats {
    int n = 0;
    int k = 0;
    int d = 0;
    std::string decoder;
    double p = 0.0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long word_errors = 0;
    long long stage1_failures = 0;
    long long stage2_failures = 0;
    double wer = 0.0;
    std::string generator;  ///< RNG identity; fixed per build
};

/// Draws messages uniformly and i.i.d. bit flips at rate p, decodes, and
/// counts word errors. Each trial derives its own generator substream from
/// (seed, trial index), so results are byte-identical regardless of thread
/// count or scheduling. Requires 0 <= p <= 1/2 and trials >= 1.
SimStats channel_simulate_ml(const Codebook& code, double p, long long trials,
                             std::uint64_t seed);

/// Same channel driving the two-stage decoder; `code` must equal the
/// (u, u+v) stack of the given components (parameter_error otherwise).
SimStats channel_simulate_staged(const Codebook& code, const Codebook& u_code,
                                 const Codebook& v_code, double p, long long trials,
                                 std::uint64_t seed);

struct GuaranteeSweep {
    long long patterns_tested = 0;     ///< (message, error) pairs enumerated
    long long in_region = 0;           ///< pairs inside the guarantee region
    long long staged_wrong = 0;        ///< in-region staged decode != transmitted
    long long ml_wrong = 0;            ///< in-region ML decode != transmitted
    long long disagreements = 0;       ///< in-region staged != ML message
    long long staged_failures_outside = 0;  ///< outside-region staged failures (informational)
};

/// Exhaustively sweeps every error pattern of weight <= max_weight against
/// every message of the (u, u+v) stack. The guarantee region is
///   w(e_L + e_R) <= floor((d_v - 1)/2)   and   w(e) <= d_u - 1,
/// the radii within which both stages provably succeed.
GuaranteeSweep sweep_guarantee_region(const Codebook& u_code, const Codebook& v_code,
                                      int max_weight);

}  // namespace cwc
