// Throughput comparison of the serial reference kernels against the OpenMP
// variants, verifying along the way that both produce identical results.
// Build and run manually:
//   cmake --build build && ./build/bench/cwc_bench [rows] [bits]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cwc/construct.hpp"
#include "cwc/decode.hpp"
#include "cwc/kernels.hpp"
#include "cwc/oracle.hpp"

namespace {

double seconds_of(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(4) << std::setw(10) << serial << " s" << std::setw(10)
              << parallel << " s" << std::setw(8) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x   "
              << (equal ? "results equal" : "RESULTS DIFFER") << "\n";
}

std::vector<cwc::Word> random_words(std::mt19937_64& eng, int count, int len) {
    std::vector<cwc::Word> words;
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < count; ++i) {
        for (char& c : s) c = (eng() & 1) ? '1' : '0';
        words.push_back(cwc::Word::from_string(s));
    }
    return words;
}

}  // namespace

int main(int argc, char** argv) {
    const int rows = argc > 1 ? std::atoi(argv[1]) : 1024;
    const int bits = argc > 2 ? std::atoi(argv[2]) : 4096;

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the same serial code\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial"
              << std::setw(12) << "parallel" << std::setw(9) << "speedup" << "\n";

    std::mt19937_64 eng(2024);
    cwc::PackedWords pw = cwc::PackedWords::pack(random_words(eng, rows, bits));

    {
        int serial_d = 0, parallel_d = 0;
        const double ts = seconds_of([&] { serial_d = cwc::min_pairwise_distance_serial(pw); });
        const double tp = seconds_of([&] { parallel_d = cwc::min_pairwise_distance(pw); });
        report("min pairwise distance", ts, tp, serial_d == parallel_d);
    }
    {
        std::vector<long long> serial_c, parallel_c;
        const double ts = seconds_of([&] { serial_c = cwc::weight_census_serial(pw); });
        const double tp = seconds_of([&] { parallel_c = cwc::weight_census(pw); });
        report("weight census", ts, tp, serial_c == parallel_c);
    }
    {
        // xor checks on a genuine subspace so nothing early-exits
        cwc::Codebook code = cwc::build_chain(cwc::parse_chain("2,1;4,2;2,2;2,2;2,2"));
        cwc::PackedWords sub = cwc::PackedWords::pack(code.words);
        cwc::ClosureCheck serial_c{}, parallel_c{};
        const double ts = seconds_of([&] { serial_c = cwc::xor_closure_serial(sub); });
        const double tp = seconds_of([&] { parallel_c = cwc::xor_closure(sub); });
        report("xor closure (126,6)", ts, tp,
               serial_c.closed == parallel_c.closed &&
                   serial_c.duplicates == parallel_c.duplicates);
    }
    {
        cwc::SearchResult serial_r, parallel_r;
        const double ts =
            seconds_of([&] { serial_r = cwc::best_linear_code_serial(14, 3, true); });
        const double tp = seconds_of([&] { parallel_r = cwc::best_linear_code(14, 3, true); });
        report("column search (14,3) cw", ts, tp,
               serial_r.best_d == parallel_r.best_d &&
                   serial_r.witness->words == parallel_r.witness->words);
    }
    {
        cwc::SearchResult serial_r, parallel_r;
        const double ts =
            seconds_of([&] { serial_r = cwc::best_linear_code_serial(12, 4, false); });
        const double tp = seconds_of([&] { parallel_r = cwc::best_linear_code(12, 4, false); });
        report("column search (12,4)", ts, tp, serial_r.best_d == parallel_r.best_d);
    }
    {
        cwc::ChainSearchOutcome serial_r, parallel_r;
        const double ts = seconds_of([&] { serial_r = cwc::chain_search_serial(94, 47); });
        const double tp = seconds_of([&] { parallel_r = cwc::chain_search(94, 47); });
        report("chain search (94,47)", ts, tp,
               serial_r.witnesses == parallel_r.witnesses && serial_r.nodes == parallel_r.nodes);
    }
    {
        cwc::Codebook code = cwc::build_chain(cwc::parse_chain("2,1;4,2"));
        cwc::SimStats serial_s, parallel_s;
#ifdef _OPENMP
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        const double ts =
            seconds_of([&] { serial_s = cwc::channel_simulate_ml(code, 0.02, 200000, 7); });
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        const double tp =
            seconds_of([&] { parallel_s = cwc::channel_simulate_ml(code, 0.02, 200000, 7); });
        report("channel sim 2e5 trials (14,3)", ts, tp,
               serial_s.word_errors == parallel_s.word_errors);
    }
    return 0;
}
