#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace cwc {

/// One best-known-minimum-distance record from the bundled Brouwer-Verhoeff
/// reference values. Entries are transcribed from the source tables only and
/// never extrapolated; `source` names the table the value came from
/// (t1..t5). Duplicate (n, k) pairs across tables must agree.
struct BvEntry {
    int n;
    int k;
    int d_bv;
    const char* source;
};

std::span<const BvEntry> bv_table();

/// d_BV for (n, k) if the pair is in the bundled table; nullopt otherwise.
std::optional<int> bv_lookup(int n, int k);

/// Canonical serialization of the embedded table: `n k d_bv source` lines.
/// Must match data/bv_table.txt byte for byte (the build pins that file's
/// checksum, and a test compares this text against it).
std::string bv_table_text();

/// FNV-1a 64 over bv_table_text().
std::uint64_t bv_table_checksum();

/// Expected checksum of the shipped table.
inline constexpr std::uint64_t bv_table_expected_checksum = 0xf8ad278abcd66ce9ULL;

}  // namespace cwc
