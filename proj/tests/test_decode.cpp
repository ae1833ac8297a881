#include <doctest.h>

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cwc/analyze.hpp"
#include "cwc/construct.hpp"
#include "cwc/decode.hpp"
#include "cwc/errors.hpp"

using namespace cwc;

namespace {

Word w(const char* text) { return Word::from_string(text); }

// Exact word error rate of the ML decoder (with its deterministic tie break)
// by enumerating every error pattern against every message.
double exact_ml_wer(const Codebook& code, double p) {
    double wer = 0.0;
    const double uniform = 1.0 / static_cast<double>(code.size());
    for (std::uint32_t message = 0; message < code.size(); ++message) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << code.n); ++mask) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(code.n));
            int weight = 0;
            for (int i = 0; i < code.n; ++i) {
                bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1);
                weight += bits[static_cast<std::size_t>(i)];
            }
            DecodeResult result = ml_decode(code, code.words[message] ^ Word::from_bits(bits));
            if (!result.message || *result.message != message)
                wer += uniform * std::pow(p, weight) * std::pow(1.0 - p, code.n - weight);
        }
    }
    return wer;
}

}  // namespace

TEST_CASE("ml decode") {
    Codebook ex1 = build_single_level(2, 1);
    SUBCASE("exact codeword") {
        DecodeResult r = ml_decode(ex1, w("011"));
        CHECK(r.message == 1);
        CHECK(r.corrected_errors == 0);
        CHECK_FALSE(r.tie);
    }
    SUBCASE("single flip inside the packing radius") {
        Codebook ex2 = build_single_level(4, 2);
        DecodeResult r = ml_decode(ex2, w("001101"));
        CHECK(r.message == 1);
        CHECK(r.corrected_errors == 1);
        CHECK_FALSE(r.tie);
    }
    SUBCASE("tie is flagged and breaks to the lowest index") {
        // distances to 001 are 1,1,3,1
        DecodeResult r = ml_decode(ex1, w("001"));
        CHECK(r.message == 0);
        CHECK(r.tie);
        CHECK(r.corrected_errors == 1);
    }
    CHECK_THROWS_AS(ml_decode(ex1, w("0110")), parameter_error);
}

TEST_CASE("majority vote") {
    CHECK(majority_decode(w("1101111")) == std::pair<int, bool>{1, true});
    CHECK(majority_decode(w("1100")) == std::pair<int, bool>{0, false});
    CHECK(majority_decode(w("0001000")) == std::pair<int, bool>{0, true});
    SUBCASE("implements the bounded-distance contract for repetition codes") {
        const int J = 7;
        for (std::uint32_t mask = 0; mask < (1u << J); ++mask) {
            std::vector<std::uint8_t> bits(J);
            int weight = 0;
            for (int i = 0; i < J; ++i) {
                bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> i) & 1);
                weight += bits[static_cast<std::size_t>(i)];
            }
            auto [bit, ok] = majority_decode(Word::zeros(J) ^ Word::from_bits(bits));
            if (weight <= (J - 1) / 2) {
                CHECK(ok);
                CHECK(bit == 0);
            }
        }
    }
}

TEST_CASE("staged decoder") {
    Codebook u3 = simplex_code(3);
    Codebook v7 = repetition_code(7);
    Codebook stacked = build_c2(u3, v7);
    StagedDecoderC2 decoder(u3, v7);

    SUBCASE("v-stage radius for repetition(7)") { CHECK(decoder.v_radius() == 3); }

    SUBCASE("zero error decodes every message") {
        for (std::uint32_t m = 0; m < stacked.size(); ++m) {
            DecodeResult r = decoder.decode(stacked.words[m]);
            CHECK(r.message == m);
            CHECK(r.stage_v_ok);
            CHECK(r.stage_u_ok);
            CHECK(r.corrected_errors == 0);
        }
    }

    SUBCASE("an odd-length repetition v-stage never fails outright") {
        // every fold of length 7 lies within radius 3 of one of the two words
        DecodeResult r = decoder.decode(w("11110000000000"));
        CHECK(r.stage_v_ok);
    }

    SUBCASE("stage-1 failure is reported, not thrown") {
        // even-length v code: a fold midway between the two words has no
        // codeword within radius floor((6-1)/2) = 2
        Codebook u6 = repetition_code(6);
        Codebook v6 = repetition_code(6);
        StagedDecoderC2 even(u6, v6);
        DecodeResult r = even.decode(w("111000000000"));
        CHECK_FALSE(r.stage_v_ok);
        CHECK_FALSE(r.message.has_value());
    }
}

TEST_CASE("stage-2 boundary: equal-half error on a minimum-weight difference") {
    // e_L = e_R = one bit of a weight-2 codeword difference folds to zero
    // (stage 1 fine) but leaves the doubled-code decision at an exact tie.
    Codebook u2 = simplex_code(2);
    Codebook v3 = repetition_code(3);
    Codebook stacked = build_c2(u2, v3);
    StagedDecoderC2 decoder(u2, v3);

    const Word e = w("100100");  // same bit in both halves
    DecodeResult r = decoder.decode(stacked.words[2] ^ e);
    CHECK(r.stage_v_ok);
    CHECK_FALSE(r.stage_u_ok);
    CHECK_FALSE(r.message.has_value());
}

TEST_CASE("guarantee region sweep: smallest stack, all 64 patterns") {
    GuaranteeSweep sweep = sweep_guarantee_region(simplex_code(2), repetition_code(3), 6);
    CHECK(sweep.patterns_tested == 64 * 8);
    CHECK(sweep.in_region > 0);
    CHECK(sweep.staged_wrong == 0);
    CHECK(sweep.ml_wrong == 0);
    CHECK(sweep.disagreements == 0);
}

TEST_CASE("channel simulation") {
    Codebook ex2 = build_single_level(4, 2);

    SUBCASE("p=0 gives exactly zero errors") {
        SimStats stats = channel_simulate_ml(ex2, 0.0, 2000, 99);
        CHECK(stats.word_errors == 0);
        CHECK(stats.wer == 0.0);
    }

    SUBCASE("identical seeds give identical stats") {
        SimStats a = channel_simulate_ml(ex2, 0.05, 20000, 123);
        SimStats b = channel_simulate_ml(ex2, 0.05, 20000, 123);
        CHECK(a.word_errors == b.word_errors);
        CHECK(a.wer == b.wer);
        SimStats c = channel_simulate_ml(ex2, 0.05, 20000, 124);
        CHECK(a.word_errors != c.word_errors);  // different substreams
    }

#ifdef _OPENMP
    SUBCASE("results are independent of the thread count") {
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        SimStats serial = channel_simulate_ml(ex2, 0.03, 30000, 5);
        omp_set_num_threads(4);
        SimStats parallel = channel_simulate_ml(ex2, 0.03, 30000, 5);
        omp_set_num_threads(saved);
        CHECK(serial.word_errors == parallel.word_errors);
    }
#endif

    SUBCASE("at p=1/2 the decode is independent of the message") {
        // received words are uniform, so the correct-decode probability is
        // exactly 2^-k regardless of tie handling
        SimStats stats = channel_simulate_ml(ex2, 0.5, 20000, 11);
        CHECK(std::abs(stats.wer - 0.75) < 0.02);
    }

    SUBCASE("empirical rate within three binomial deviations of exact") {
        const double p = 0.01;
        const long long trials = 100000;
        const double exact = exact_ml_wer(ex2, p);
        SimStats stats = channel_simulate_ml(ex2, p, trials, 1);
        const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        CHECK(std::abs(stats.wer - exact) <= 3.0 * sigma);
    }

    SUBCASE("staged simulation needs matching components") {
        Codebook u3 = simplex_code(3);
        Codebook v7 = repetition_code(7);
        Codebook stacked = build_c2(u3, v7);
        SimStats stats = channel_simulate_staged(stacked, u3, v7, 0.02, 5000, 42);
        CHECK(stats.decoder == "staged");
        CHECK(stats.trials == 5000);
        CHECK_THROWS_AS(channel_simulate_staged(build_c3(3), u3, v7, 0.02, 100, 1),
                        parameter_error);
    }

    CHECK_THROWS_AS(channel_simulate_ml(ex2, 0.7, 100, 1), parameter_error);
    CHECK_THROWS_AS(channel_simulate_ml(ex2, 0.1, 0, 1), parameter_error);
}
