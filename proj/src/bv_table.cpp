#include "cwc/bv_table.hpp"

namespace cwc {

namespace {

// Transcribed values. t4 rows carry the number of information symbols the
// witness chains actually measure (the source table's caption disagrees with
// its own rows there; see the t4 handling in tables.cpp).
constexpr BvEntry kTable[] = {
    // t1: three-block stack examples
    {9, 3, 4, "t1"},
    {21, 4, 10, "t1"},
    {45, 5, 22, "t1"},
    {93, 6, 46, "t1"},
    // t2: k=2 family, printed rows only
    {3, 2, 2, "t2"},
    {6, 2, 4, "t2"},
    {9, 2, 6, "t2"},
    {12, 2, 8, "t2"},
    {117, 2, 78, "t2"},
    {120, 2, 80, "t2"},
    {123, 2, 82, "t2"},
    {126, 2, 84, "t2"},
    // t3: k=3 family, all 18 printed rows
    {7, 3, 4, "t3"},
    {14, 3, 8, "t3"},
    {21, 3, 12, "t3"},
    {28, 3, 16, "t3"},
    {35, 3, 20, "t3"},
    {42, 3, 24, "t3"},
    {49, 3, 28, "t3"},
    {56, 3, 32, "t3"},
    {63, 3, 36, "t3"},
    {70, 3, 40, "t3"},
    {77, 3, 44, "t3"},
    {84, 3, 48, "t3"},
    {91, 3, 52, "t3"},
    {98, 3, 56, "t3"},
    {105, 3, 60, "t3"},
    {112, 3, 64, "t3"},
    {119, 3, 68, "t3"},
    {126, 3, 72, "t3"},
    // t4: multi-level chain targets
    {3, 2, 2, "t4"},
    {10, 3, 5, "t4"},
    {11, 3, 6, "t4"},
    {22, 4, 11, "t4"},
    {23, 4, 12, "t4"},
    {46, 5, 23, "t4"},
    {47, 5, 24, "t4"},
    {94, 6, 47, "t4"},
    {95, 6, 48, "t4"},
    // t5: doubling family, one row per k
    {3, 2, 2, "t5"},
    {14, 3, 8, "t5"},
    {30, 4, 16, "t5"},
    {62, 5, 32, "t5"},
    {126, 6, 64, "t5"},
};

}  // namespace

std::span<const BvEntry> bv_table() { return kTable; }

std::optional<int> bv_lookup(int n, int k) {
    for (const BvEntry& e : kTable)
        if (e.n == n && e.k == k) return e.d_bv;
    return std::nullopt;
}

std::string bv_table_text() {
    std::string out;
    for (const BvEntry& e : kTable)
        out += std::to_string(e.n) + ' ' + std::to_string(e.k) + ' ' + std::to_string(e.d_bv) +
               ' ' + e.source + '\n';
    return out;
}

std::uint64_t bv_table_checksum() {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bv_table_text()) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace cwc
