#include "cwc/word.hpp"

#include <bit>

#include "cwc/errors.hpp"

namespace cwc {

namespace {

void check_len(int len) {
    if (len < 0 || len > Word::max_len)
        throw capacity_error("word length " + std::to_string(len) + " outside [0, " +
                             std::to_string(Word::max_len) + "]");
}

}  // namespace

Word Word::zeros(int len) {
    check_len(len);
    return Word(len, std::vector<std::uint64_t>(blocks_for(len), 0));
}

Word Word::ones(int len) {
    check_len(len);
    std::vector<std::uint64_t> blocks(blocks_for(len), ~std::uint64_t{0});
    if (len % 64 != 0 && !blocks.empty())
        blocks.back() &= (std::uint64_t{1} << (len % 64)) - 1;
    return Word(len, std::move(blocks));
}

Word Word::from_string(std::string_view text) {
    Word w = zeros(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w.set_bit(static_cast<int>(i));
        else if (text[i] != '0')
            throw format_error("invalid bit character '" + std::string(1, text[i]) +
                               "' at position " + std::to_string(i));
    }
    return w;
}

Word Word::from_bits(std::span<const std::uint8_t> bits) {
    Word w = zeros(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w.set_bit(static_cast<int>(i));
    return w;
}

bool Word::bit(int i) const {
    if (i < 0 || i >= len_) throw structural_error("bit index out of range");
    return (blocks_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
}

int Word::weight() const noexcept {
    int w = 0;
    for (std::uint64_t b : blocks_) w += std::popcount(b);
    return w;
}

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
        if ((blocks_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word Word::slice(int pos, int len) const {
    if (pos < 0 || len < 0 || pos + len > len_) throw structural_error("slice out of range");
    Word out = zeros(len);
    for (int i = 0; i < len; ++i) {
        int j = pos + i;
        if ((blocks_[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1) out.set_bit(i);
    }
    return out;
}

Word operator^(const Word& a, const Word& b) {
    if (a.len_ != b.len_)
        throw structural_error("xor of words with different lengths (" + std::to_string(a.len_) +
                               " vs " + std::to_string(b.len_) + ")");
    std::vector<std::uint64_t> blocks(a.blocks_.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = a.blocks_[i] ^ b.blocks_[i];
    return Word(a.len_, std::move(blocks));
}

int distance(const Word& a, const Word& b) {
    if (a.len_ != b.len_)
        throw structural_error("distance of words with different lengths (" +
                               std::to_string(a.len_) + " vs " + std::to_string(b.len_) + ")");
    int d = 0;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) d += std::popcount(a.blocks_[i] ^ b.blocks_[i]);
    return d;
}

Word concat(const Word& a, const Word& b) {
    check_len(a.len_ + b.len_);
    Word out = Word::zeros(a.len_ + b.len_);
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) out.blocks_[i] = a.blocks_[i];
    const int offset = a.len_ & 63;
    const std::size_t base = static_cast<std::size_t>(a.len_) >> 6;
    for (std::size_t j = 0; j < b.blocks_.size(); ++j) {
        out.blocks_[base + j] |= b.blocks_[j] << offset;
        if (offset != 0 && base + j + 1 < out.blocks_.size())
            out.blocks_[base + j + 1] |= b.blocks_[j] >> (64 - offset);
    }
    return out;
}

Word repeat(const Word& a, int count) {
    if (count < 0) throw parameter_error("repeat count must be >= 0");
    check_len(a.length() * count);
    Word out = Word::zeros(0);
    for (int i = 0; i < count; ++i) out = concat(out, a);
    return out;
}

Word pad_zeros(const Word& a, int pad) {
    if (pad < 0) throw parameter_error("pad length must be >= 0");
    return concat(a, Word::zeros(pad));
}

}  // namespace cwc
