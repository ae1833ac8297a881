#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwc/codebook.hpp"

namespace cwc {

/// One application of the padded stacking transform.
///
/// Starting from a previous code of length N, a level places `a` clear copies
/// of the previous codeword in front and `b` copies under the one-bit mask,
/// padded by `h` zeros: the new word is
///   ( c^a , (c^b * 0^h) + v )   with v in {0^J, 1^J}, J = b*N + h.
/// a + b = s. The masked half carries one new information bit.
struct LevelSpec {
    int s = 0;
    int h = 0;
    int a = 0;
    int b = 0;

    bool operator==(const LevelSpec&) const = default;
};

/// Level with the default split a = floor(s/2), b = ceil(s/2).
LevelSpec make_level(int s, int h);
LevelSpec make_level(int s, int h, int a, int b);

struct ChainSpec {
    std::vector<LevelSpec> levels;

    bool operator==(const ChainSpec&) const = default;
};

/// Canonical text form `s,h,a,b;s,h,a,b;...`.
std::string to_string(const ChainSpec& chain);

/// Parses `s,h[,a,b];...`; a,b default to the floor/ceil split. Throws
/// format_error with the character position of the problem.
ChainSpec parse_chain(std::string_view text);

/// {0^J, 1^J}: n = J, k = 1.
Codebook repetition_code(int J);

/// Feedback polynomial masks known to be maximal, degrees 2..8. Bit i of the
/// mask is the coefficient of x^i; bit nu and bit 0 are always set.
std::uint32_t default_primitive_poly(int nu);

/// All cyclic shifts of the maximal-period LFSR sequence plus the zero word:
/// n = 2^nu - 1, k = nu, every nonzero word of weight 2^(nu-1).
///
/// words[s] is the register output run started from initial state s, so the
/// codeword index equals the initial state value; the sequence phase is fixed
/// by that convention. The polynomial is validated at run time by measuring
/// the state-orbit period.
Codebook simplex_code(int nu, std::uint32_t primitive_poly);
Codebook simplex_code(int nu);

/// Two-block stack (u, u+v); u and v codes must have equal length.
/// n = 2*u.n, k = u.k + v.k, message index = (m_u << v.k) | m_v.
Codebook build_c2(const Codebook& u_code, const Codebook& v_code);

/// Three-block stack (u, u*u + v) with u the simplex code of degree nu and
/// v the repetition code of length 2*(2^nu - 1): n = 3*(2^nu - 1), k = nu + 1.
Codebook build_c3(int nu, std::uint32_t primitive_poly);
Codebook build_c3(int nu);

/// Two-symbol padded code: word(m1, m2) = (m1^h1, (m1^h1 * 0^(s1-h1)) + m2^s1),
/// n = h1 + s1, k = 2. Equals a one-level chain with split (h1, h1) and pad
/// s1 - h1; requires s1 >= h1.
Codebook build_single_level(int s1, int h1);

/// Applies one level to an existing code; k grows by one.
Codebook superimpose_level(const Codebook& prev, const LevelSpec& level);

/// Folds superimpose_level over the levels starting from the base code {0,1}.
/// k = levels + 1.
Codebook build_chain(const ChainSpec& chain);

/// Closed-form (length, min distance, max pairwise distance) tracker for the
/// level transform. Starting from the base code (n=1, d=1, D=1), apply() maps
/// the triple through one level:
///   J  = b*n + h
///   n' = a*n + J
///   d' = min( s*d, J - (b-a)*D, J )
///   D' = max( s*D, J, J + (a-b)*d, J + (a-b)*D )
/// The d/D branches cover the three difference shapes (v equal, codewords
/// equal, both differ); endpoints suffice because each branch is linear in
/// the previous pairwise distance.
struct ChainState {
    int n = 1;
    int d = 1;
    int D = 1;

    void apply(const LevelSpec& level);
};

struct PredictedParams {
    int n = 0;
    int k = 0;
    int d_lower = 0;
};

/// Closed-form parameters of a chain code. d_lower never exceeds the measured
/// minimum distance, and equals it on every bundled table instance.
PredictedParams predict_params(const ChainSpec& chain);

}  // namespace cwc
