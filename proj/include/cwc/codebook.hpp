#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cwc/word.hpp"

namespace cwc {

/// An ordered set of 2^k equal-length words plus the message-to-codeword map.
///
/// words[m] is the codeword for message m, where the message bits m_1..m_k
/// are read as a big-endian integer (m_1 most significant). Reconstructing
/// with identical parameters yields an identical ordered list.
struct Codebook {
    int n = 0;                ///< code length in bits
    int k = 0;                ///< number of information symbols
    std::vector<Word> words;  ///< 2^k words of length n, message-index order

    std::size_t size() const noexcept { return words.size(); }
    const Word& word(std::uint32_t message) const { return words.at(message); }
};

/// Canonical text form: `# n=<int> k=<int>` header, then 2^k rows of 0/1
/// text in message-index order. Bit-exact; used by files and CLI output.
std::string to_text(const Codebook& code);

/// Parses the canonical text form. Throws format_error naming the offending
/// line on any structural problem.
Codebook codebook_from_text(std::string_view text);

void save_codebook(const std::filesystem::path& path, const Codebook& code);
Codebook load_codebook(const std::filesystem::path& path);

}  // namespace cwc
