#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cwc {

/// Fixed-length bit vector over GF(2).
///
/// Bit 0 is the leftmost character of the textual form, matching the
/// canonical codebook file layout, so printing a Word reproduces a codebook
/// row verbatim. Words are immutable values; every operation returns a new
/// Word. Lengths are capped at max_len so the backing storage stays dense.
class Word {
public:
    static constexpr int max_len = 4096;

    Word() = default;

    static Word zeros(int len);
    static Word ones(int len);
    /// Parses a string over {0,1}, leftmost character = bit 0.
    static Word from_string(std::string_view text);
    /// Builds a word from 0/1 bytes, bits[i] = bit i.
    static Word from_bits(std::span<const std::uint8_t> bits);

    int length() const noexcept { return len_; }
    bool bit(int i) const;
    /// Number of 1-bits.
    int weight() const noexcept;
    std::string str() const;

    /// Contiguous sub-word of `len` bits starting at `pos`.
    Word slice(int pos, int len) const;

    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    Word(int len, std::vector<std::uint64_t> blocks)
        : len_(len), blocks_(std::move(blocks)) {}

    static int blocks_for(int len) { return (len + 63) / 64; }
    void set_bit(int i) { blocks_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

    int len_ = 0;
    std::vector<std::uint64_t> blocks_;  // bit i at blocks_[i/64] >> (i%64); tail bits zero

    friend Word operator^(const Word& a, const Word& b);
    friend int distance(const Word& a, const Word& b);
    friend Word concat(const Word& a, const Word& b);
};

/// GF(2) addition; operands must have equal length.
Word operator^(const Word& a, const Word& b);

/// Hamming distance; operands must have equal length.
int distance(const Word& a, const Word& b);

/// a followed by b.
Word concat(const Word& a, const Word& b);

/// a concatenated with itself `count` times (count >= 0; 0 gives the empty word).
Word repeat(const Word& a, int count);

/// a followed by `pad` zero bits.
Word pad_zeros(const Word& a, int pad);

}  // namespace cwc
