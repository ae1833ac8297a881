#include "cwc/codebook.hpp"

#include <fstream>
#include <sstream>

#include "cwc/errors.hpp"

namespace cwc {

std::string to_text(const Codebook& code) {
    std::string out = "# n=" + std::to_string(code.n) + " k=" + std::to_string(code.k) + "\n";
    for (const Word& w : code.words) {
        out += w.str();
        out += '\n';
    }
    return out;
}

Codebook codebook_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw format_error("line 1: empty codebook input");
    ++lineno;
    int n = -1, k = -1;
    if (std::sscanf(line.c_str(), "# n=%d k=%d", &n, &k) != 2)
        throw format_error("line 1: expected header '# n=<int> k=<int>', got '" + line + "'");
    if (n < 1 || n > Word::max_len)
        throw format_error("line 1: n=" + std::to_string(n) + " out of range");
    if (k < 0 || k > 20) throw format_error("line 1: k=" + std::to_string(k) + " out of range");

    Codebook code;
    code.n = n;
    code.k = k;
    const std::size_t expect = std::size_t{1} << k;
    code.words.reserve(expect);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && code.words.size() == expect) break;  // trailing blank ok
        if (static_cast<int>(line.size()) != n)
            throw format_error("line " + std::to_string(lineno) + ": row has length " +
                               std::to_string(line.size()) + ", expected n=" + std::to_string(n));
        try {
            code.words.push_back(Word::from_string(line));
        } catch (const format_error& e) {
            throw format_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (code.words.size() != expect)
        throw format_error("line " + std::to_string(lineno) + ": got " +
                           std::to_string(code.words.size()) + " rows, expected 2^k = " +
                           std::to_string(expect));
    return code;
}

void save_codebook(const std::filesystem::path& path, const Codebook& code) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open '" + path.string() + "' for writing");
    out << to_text(code);
}

Codebook load_codebook(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return codebook_from_text(buf.str());
}

}  // namespace cwc
