#include "cwc/construct.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "cwc/errors.hpp"

namespace cwc {

LevelSpec make_level(int s, int h) { return LevelSpec{s, h, s / 2, s - s / 2}; }

LevelSpec make_level(int s, int h, int a, int b) { return LevelSpec{s, h, a, b}; }

namespace {

void validate_level(const LevelSpec& level, int prev_n) {
    if (level.s < 1) throw parameter_error("level: s must be >= 1");
    if (level.h < 0) throw parameter_error("level: h must be >= 0");
    if (level.a < 0 || level.b < 0 || level.a + level.b != level.s)
        throw parameter_error("level: split must satisfy a+b=s with a,b >= 0");
    if (level.b * prev_n + level.h < 1)
        throw parameter_error("level: masked half would be empty (b*N + h = 0)");
}

}  // namespace

std::string to_string(const ChainSpec& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.levels.size(); ++i) {
        const LevelSpec& lv = chain.levels[i];
        if (i) out += ';';
        out += std::to_string(lv.s) + ',' + std::to_string(lv.h) + ',' + std::to_string(lv.a) +
               ',' + std::to_string(lv.b);
    }
    return out;
}

ChainSpec parse_chain(std::string_view text) {
    ChainSpec chain;
    std::size_t pos = 0;

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw format_error("chain spec: expected integer at position " + std::to_string(start));
        int value = 0;
        for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
        return value;
    };

    while (true) {
        std::vector<int> fields;
        fields.push_back(parse_int());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            fields.push_back(parse_int());
            skip_ws();
        }
        if (fields.size() != 2 && fields.size() != 4)
            throw format_error("chain spec: level before position " + std::to_string(pos) +
                               " has " + std::to_string(fields.size()) +
                               " fields, expected s,h or s,h,a,b");
        chain.levels.push_back(fields.size() == 2
                                   ? make_level(fields[0], fields[1])
                                   : make_level(fields[0], fields[1], fields[2], fields[3]));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ';')
            throw format_error("chain spec: unexpected character '" + std::string(1, text[pos]) +
                               "' at position " + std::to_string(pos));
        ++pos;
    }
    return chain;
}

Codebook repetition_code(int J) {
    if (J < 1) throw parameter_error("repetition code length must be >= 1");
    Codebook code;
    code.n = J;
    code.k = 1;
    code.words = {Word::zeros(J), Word::ones(J)};
    return code;
}

std::uint32_t default_primitive_poly(int nu) {
    switch (nu) {
        case 2: return 0b111;        // x^2 + x + 1
        case 3: return 0b1011;       // x^3 + x + 1
        case 4: return 0b10011;      // x^4 + x + 1
        case 5: return 0b100101;     // x^5 + x^2 + 1
        case 6: return 0b1000011;    // x^6 + x + 1
        case 7: return 0b10001001;   // x^7 + x^3 + 1
        case 8: return 0b100011101;  // x^8 + x^4 + x^3 + x^2 + 1
        default: throw parameter_error("no default feedback polynomial for degree " + std::to_string(nu));
    }
}

Codebook simplex_code(int nu, std::uint32_t primitive_poly) {
    if (nu < 2 || nu > 8) throw parameter_error("simplex degree must be in 2..8");
    const std::uint32_t degree_bit = std::uint32_t{1} << nu;
    if (!(primitive_poly & degree_bit) || (primitive_poly >> (nu + 1)) != 0)
        throw parameter_error("feedback polynomial mask does not have degree " + std::to_string(nu));
    if (!(primitive_poly & 1))
        throw parameter_error("feedback polynomial must have a unit constant term");

    const std::uint32_t taps = primitive_poly & (degree_bit - 1);
    const int period_target = (1 << nu) - 1;

    // State transition: drop the oldest bit, append the tap parity. The unit
    // constant term makes this a permutation, so the orbit of any nonzero
    // state is a cycle; maximality <=> the cycle through state 1 has full
    // length.
    auto step = [&](std::uint32_t state) {
        std::uint32_t fb = static_cast<std::uint32_t>(std::popcount(state & taps) & 1);
        return (state >> 1) | (fb << (nu - 1));
    };
    std::uint32_t state = 1;
    int period = 0;
    do {
        state = step(state);
        ++period;
    } while (state != 1 && period <= period_target);
    if (period != period_target)
        throw validation_error("feedback polynomial is not maximal: measured period " +
                               std::to_string(period) + ", need " + std::to_string(period_target));

    Codebook code;
    code.n = period_target;
    code.k = nu;
    code.words.reserve(std::size_t{1} << nu);
    std::vector<std::uint8_t> seq(static_cast<std::size_t>(period_target));
    for (std::uint32_t init = 0; init < (std::uint32_t{1} << nu); ++init) {
        std::uint32_t reg = init;
        for (int t = 0; t < period_target; ++t) {
            seq[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(reg & 1);
            reg = step(reg);
        }
        code.words.push_back(Word::from_bits(seq));
    }
    return code;
}

Codebook simplex_code(int nu) { return simplex_code(nu, default_primitive_poly(nu)); }

Codebook build_c2(const Codebook& u_code, const Codebook& v_code) {
    if (u_code.n != v_code.n)
        throw parameter_error("(u, u+v) stack needs equal component lengths, got " +
                              std::to_string(u_code.n) + " and " + std::to_string(v_code.n));
    Codebook code;
    code.n = 2 * u_code.n;
    code.k = u_code.k + v_code.k;
    code.words.reserve(u_code.size() * v_code.size());
    for (const Word& u : u_code.words)
        for (const Word& v : v_code.words) code.words.push_back(concat(u, u ^ v));
    return code;
}

Codebook build_c3(int nu, std::uint32_t primitive_poly) {
    Codebook u_code = simplex_code(nu, primitive_poly);
    Codebook v_code = repetition_code(2 * u_code.n);
    Codebook code;
    code.n = 3 * u_code.n;
    code.k = u_code.k + 1;
    code.words.reserve(u_code.size() * 2);
    for (const Word& u : u_code.words) {
        Word uu = repeat(u, 2);
        for (const Word& v : v_code.words) code.words.push_back(concat(u, uu ^ v));
    }
    return code;
}

Codebook build_c3(int nu) { return build_c3(nu, default_primitive_poly(nu)); }

Codebook build_single_level(int s1, int h1) {
    if (s1 < 1) throw parameter_error("s1 must be >= 1");
    if (h1 < 0) throw parameter_error("h1 must be >= 0");
    if (s1 < h1)
        throw parameter_error("masked half too short: J = s1 = " + std::to_string(s1) +
                              " < h1 = " + std::to_string(h1));
    Codebook code;
    code.n = h1 + s1;
    code.k = 2;
    code.words.reserve(4);
    for (int m1 = 0; m1 < 2; ++m1) {
        Word u = m1 ? Word::ones(h1) : Word::zeros(h1);
        Word padded = pad_zeros(u, s1 - h1);
        for (int m2 = 0; m2 < 2; ++m2) {
            Word v = m2 ? Word::ones(s1) : Word::zeros(s1);
            code.words.push_back(concat(u, padded ^ v));
        }
    }
    return code;
}

Codebook superimpose_level(const Codebook& prev, const LevelSpec& level) {
    validate_level(level, prev.n);
    const int J = level.b * prev.n + level.h;
    const int new_n = level.a * prev.n + J;
    if (new_n > Word::max_len)
        throw capacity_error("level result length " + std::to_string(new_n) + " exceeds cap " +
                             std::to_string(Word::max_len));
    Codebook code;
    code.n = new_n;
    code.k = prev.k + 1;
    code.words.reserve(prev.size() * 2);
    for (const Word& c : prev.words) {
        Word clear = repeat(c, level.a);
        Word masked = pad_zeros(repeat(c, level.b), level.h);
        for (int mv = 0; mv < 2; ++mv) {
            Word v = mv ? Word::ones(J) : Word::zeros(J);
            code.words.push_back(concat(clear, masked ^ v));
        }
    }
    return code;
}

Codebook build_chain(const ChainSpec& chain) {
    if (chain.levels.empty()) throw parameter_error("chain needs at least one level");
    Codebook code = repetition_code(1);  // base {0, 1}
    for (const LevelSpec& level : chain.levels) code = superimpose_level(code, level);
    return code;
}

void ChainState::apply(const LevelSpec& level) {
    validate_level(level, n);
    const int J = level.b * n + level.h;
    const int diff = level.b - level.a;
    const int d2 = std::min({(level.a + level.b) * d, J - diff * D, J});
    const int D2 = std::max({(level.a + level.b) * D, J, J - diff * d, J - diff * D});
    n = level.a * n + J;
    d = d2;
    D = D2;
}

PredictedParams predict_params(const ChainSpec& chain) {
    if (chain.levels.empty()) throw parameter_error("chain needs at least one level");
    ChainState state;
    for (const LevelSpec& level : chain.levels) state.apply(level);
    return PredictedParams{state.n, static_cast<int>(chain.levels.size()) + 1, state.d};
}

}  // namespace cwc
