#include <doctest.h>

#include <random>
#include <set>

#include "cwc/analyze.hpp"
#include "cwc/construct.hpp"
#include "cwc/errors.hpp"

using namespace cwc;

namespace {

std::vector<std::string> rows(const Codebook& code) {
    std::vector<std::string> out;
    for (const Word& w : code.words) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("repetition code") {
    CHECK(rows(repetition_code(2)) == std::vector<std::string>{"00", "11"});
    CHECK(rows(repetition_code(1)) == std::vector<std::string>{"0", "1"});
    CHECK(rows(repetition_code(8)) == std::vector<std::string>{"00000000", "11111111"});
    CHECK_THROWS_AS(repetition_code(0), parameter_error);
}

TEST_CASE("simplex code") {
    SUBCASE("nu=2 codewords indexed by initial state") {
        Codebook code = simplex_code(2);
        CHECK(code.n == 3);
        CHECK(code.k == 2);
        CHECK(rows(code) == std::vector<std::string>{"000", "101", "011", "110"});
        CHECK(min_distance(code) == 2);
    }
    SUBCASE("every nonzero word has weight 2^(nu-1)") {
        for (int nu = 2; nu <= 8; ++nu) {
            Codebook code = simplex_code(nu);
            CHECK(code.n == (1 << nu) - 1);
            CHECK(code.k == nu);
            for (std::size_t m = 1; m < code.size(); ++m)
                CHECK(code.words[m].weight() == (1 << (nu - 1)));
        }
    }
    SUBCASE("nu=4 minimum nonzero weight by enumeration") {
        Codebook code = simplex_code(4, 0b10011);
        int min_w = code.n;
        for (std::size_t m = 1; m < code.size(); ++m) min_w = std::min(min_w, code.words[m].weight());
        CHECK(min_w == 8);
        CHECK(min_distance(code) == 8);
    }
    SUBCASE("nonzero words are exactly the cyclic shifts of one sequence") {
        Codebook code = simplex_code(3);
        const std::string m_seq = code.words[code.size() - 1].str();  // all-ones state
        std::set<std::string> shifts;
        for (std::size_t r = 0; r < m_seq.size(); ++r)
            shifts.insert(m_seq.substr(r) + m_seq.substr(0, r));
        std::set<std::string> nonzero;
        for (std::size_t m = 1; m < code.size(); ++m) nonzero.insert(code.words[m].str());
        CHECK(shifts == nonzero);
    }
    SUBCASE("non-maximal polynomial is rejected with the measured period") {
        // x^4 + x^3 + x^2 + x + 1 divides x^5 - 1: period 5
        CHECK_THROWS_WITH_AS(simplex_code(4, 0b11111),
                             doctest::Contains("period 5"), validation_error);
        CHECK_THROWS_AS(simplex_code(4, 0b0011), parameter_error);   // degree too low
        CHECK_THROWS_AS(simplex_code(4, 0b10010), parameter_error);  // no unit term
    }
}

TEST_CASE("(u, u+v) stack") {
    CHECK(rows(build_c2(repetition_code(1), repetition_code(1))) ==
          std::vector<std::string>{"00", "01", "11", "10"});

    Codebook c2 = build_c2(simplex_code(2), repetition_code(3));
    CHECK(c2.n == 6);
    CHECK(c2.k == 3);
    CHECK(c2.size() == 8);  // always 2^(k_u + k_v)
    CHECK(min_distance(c2) == 3);

    CHECK_THROWS_AS(build_c2(simplex_code(2), repetition_code(4)), parameter_error);
}

TEST_CASE("three-block stack") {
    struct Expected { int nu, n, k, d; };
    for (Expected e : {Expected{2, 9, 3, 4}, Expected{3, 21, 4, 10}, Expected{5, 93, 6, 46}}) {
        Codebook code = build_c3(e.nu);
        CHECK(code.n == e.n);
        CHECK(code.k == e.k);
        CHECK(min_distance(code) == e.d);
    }
    SUBCASE("distance formula") {
        for (int nu = 2; nu <= 5; ++nu) {
            const int half = 1 << (nu - 1);
            const int expected = std::min(3 * half, (1 << (nu + 1)) - 2 - half);
            CHECK(min_distance(build_c3(nu)) == expected);
        }
    }
}

TEST_CASE("single-level code") {
    CHECK(rows(build_single_level(2, 1)) ==
          std::vector<std::string>{"000", "011", "110", "101"});
    CHECK(rows(build_single_level(4, 2)) ==
          std::vector<std::string>{"000000", "001111", "111100", "110011"});

    Codebook code = build_single_level(6, 3);
    CHECK(code.n == 9);
    CHECK(code.k == 2);
    CHECK(min_distance(code) == 6);
    CHECK(is_constant_weight(code).first);

    CHECK_THROWS_AS(build_single_level(2, 3), parameter_error);
}

TEST_CASE("superimpose level") {
    SUBCASE("first stacked example") {
        Codebook code = superimpose_level(build_single_level(2, 1), make_level(2, 1));
        CHECK(rows(code) == std::vector<std::string>{"0000000", "0001111", "0110110", "0111001",
                                                     "1101100", "1100011", "1011010", "1010101"});
    }
    SUBCASE("second stacked example") {
        Codebook code = superimpose_level(build_single_level(2, 1), make_level(4, 2));
        CHECK(code.n == 14);
        CHECK(code.words[1].str() == "00000011111111");
        CHECK(code.words[3].str() == "01101110010011");
        CHECK(min_distance(code) == 8);
    }
    SUBCASE("b=0 split is degenerate but legal") {
        Codebook code = superimpose_level(build_single_level(2, 1), make_level(2, 2, 2, 0));
        CHECK(code.n == 8);  // a*3 + J with J = h = 2
        CHECK(code.k == 3);
        for (std::size_t m = 0; m < code.size(); m += 2)
            CHECK(code.words[m].slice(6, 2).str() == "00");
    }
    SUBCASE("empty masked half is rejected") {
        CHECK_THROWS_AS(superimpose_level(build_single_level(2, 1), make_level(2, 0, 2, 0)),
                        parameter_error);
    }
}

TEST_CASE("chains") {
    CHECK(rows(build_chain(parse_chain("2,1,1,1"))) == rows(build_single_level(2, 1)));

    Codebook t5 = build_chain(parse_chain("2,1;4,2;2,2;2,2;2,2"));
    CHECK(t5.n == 126);
    CHECK(t5.k == 6);
    CHECK(min_distance(t5) == 64);

    Codebook t4 = build_chain(parse_chain("2,1,1,1;3,2,1,2"));
    CHECK(t4.n == 11);
    CHECK(t4.k == 3);
    CHECK(min_distance(t4) == 6);

    SUBCASE("words[0] is all-zero everywhere") {
        for (const Codebook& code :
             {build_chain(parse_chain("2,1;3,2,1,2")), build_c3(3), build_single_level(8, 4)})
            CHECK(code.words[0].weight() == 0);
    }
}

TEST_CASE("chain spec text form") {
    ChainSpec chain = parse_chain("2,1;4,2,2,2");
    CHECK(chain.levels.size() == 2);
    CHECK(chain.levels[0].a == 1);  // default split floor/ceil
    CHECK(chain.levels[0].b == 1);
    CHECK(to_string(chain) == "2,1,1,1;4,2,2,2");
    CHECK(parse_chain(to_string(chain)) == chain);
    CHECK(parse_chain("3,1").levels[0].a == 1);
    CHECK(parse_chain("3,1").levels[0].b == 2);
    CHECK(parse_chain(" 2 , 1 ; 4 , 2 ").levels.size() == 2);

    CHECK_THROWS_WITH_AS(parse_chain("2,1,1"), doctest::Contains("fields"), format_error);
    CHECK_THROWS_WITH_AS(parse_chain("2,x"), doctest::Contains("position 2"), format_error);
    CHECK_THROWS_WITH_AS(parse_chain("2,1|3,1"), doctest::Contains("position 3"), format_error);
}

TEST_CASE("predicted parameters") {
    auto p1 = predict_params(parse_chain("2,1,1,1"));
    CHECK(p1.n == 3);
    CHECK(p1.k == 2);
    CHECK(p1.d_lower == 2);

    auto p2 = predict_params(parse_chain("2,1,1,1;20,10,10,10"));
    CHECK(p2.n == 70);
    CHECK(p2.k == 3);
    CHECK(p2.d_lower == 40);

    auto p3 = predict_params(parse_chain("2,1,1,1;3,2,1,2;2,0,1,1"));
    CHECK(p3.n == 22);
    CHECK(p3.k == 4);
    CHECK(p3.d_lower == 11);
    CHECK(min_distance(build_chain(parse_chain("2,1,1,1;3,2,1,2;2,0,1,1"))) == 11);
}

TEST_CASE("prediction matches measurement on random chains") {
    std::mt19937_64 eng(7);
    int checked = 0;
    while (checked < 150) {
        ChainSpec chain;
        int n = 1;
        const int levels = 1 + static_cast<int>(eng() % 4);
        for (int i = 0; i < levels; ++i) {
            const int s = 1 + static_cast<int>(eng() % 5);
            const int h = static_cast<int>(eng() % 5);
            const int a = static_cast<int>(eng() % static_cast<unsigned>(s + 1));
            const int b = s - a;
            if (b * n + h < 1) break;
            chain.levels.push_back(make_level(s, h, a, b));
            n = s * n + h;
            if (n > 400) break;
        }
        if (chain.levels.empty() || n > 400) continue;
        ++checked;
        Codebook code = build_chain(chain);
        PredictedParams predicted = predict_params(chain);
        CHECK(predicted.n == code.n);
        CHECK(predicted.k == code.k);
        // the lower bound is tight for this transform
        int measured = code.size() >= 2 ? min_distance(code) : 0;
        CHECK(predicted.d_lower <= measured);
        CHECK(predicted.d_lower == measured);
    }
}

TEST_CASE("k=2 family is constant weight for every h1 in 1..42") {
    for (int h1 = 1; h1 <= 42; ++h1) {
        Codebook code = build_single_level(2 * h1, h1);
        CHECK(code.n == 3 * h1);
        CHECK(min_distance(code) == 2 * h1);
        auto [cw, weight] = is_constant_weight(code);
        CHECK(cw);
        CHECK(weight == 2 * h1);
    }
}

TEST_CASE("k=3 family is constant weight for every even s2 in 2..36") {
    for (int s2 = 2; s2 <= 36; s2 += 2) {
        ChainSpec chain{{make_level(2, 1), make_level(s2, s2 / 2)}};
        Codebook code = build_chain(chain);
        CHECK(code.n == 7 * s2 / 2);
        CHECK(code.k == 3);
        CHECK(min_distance(code) == 2 * s2);
        CHECK(is_constant_weight(code).first);
    }
}

TEST_CASE("constructions are linear") {
    CHECK(is_linear(build_chain(parse_chain("2,1;4,2"))));
    CHECK(is_linear(build_c2(simplex_code(3), repetition_code(7))));
    CHECK(is_linear(build_c3(4)));
    CHECK(is_linear(build_single_level(10, 5)));
}
