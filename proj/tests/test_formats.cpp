#include <doctest.h>

#include "cwc/codebook.hpp"
#include "cwc/construct.hpp"
#include "cwc/errors.hpp"
#include "cwc/json_io.hpp"

using namespace cwc;

TEST_CASE("codebook text format") {
    const std::string golden = "# n=3 k=2\n000\n011\n110\n101\n";
    CHECK(to_text(build_single_level(2, 1)) == golden);

    Codebook parsed = codebook_from_text(golden);
    CHECK(parsed.n == 3);
    CHECK(parsed.k == 2);
    CHECK(parsed.words == build_single_level(2, 1).words);

    SUBCASE("round trip on a larger code") {
        Codebook code = build_c3(4);
        CHECK(codebook_from_text(to_text(code)).words == code.words);
    }

    SUBCASE("format errors carry line numbers") {
        CHECK_THROWS_WITH_AS(codebook_from_text("garbage\n000\n"), doctest::Contains("line 1"),
                             format_error);
        CHECK_THROWS_WITH_AS(codebook_from_text("# n=3 k=2\n000\n01\n110\n101\n"),
                             doctest::Contains("line 3"), format_error);
        CHECK_THROWS_WITH_AS(codebook_from_text("# n=3 k=2\n000\n0x0\n110\n101\n"),
                             doctest::Contains("line 3"), format_error);
        CHECK_THROWS_WITH_AS(codebook_from_text("# n=3 k=2\n000\n011\n"),
                             doctest::Contains("expected 2^k"), format_error);
    }
}

TEST_CASE("report JSON is stable") {
    const std::string expected =
        R"({"n":3,"k":2,"d":2,"spectrum":{"0":1,"2":3},"constant_weight":true,)"
        R"("constant_weight_value":2,"linear":true,"d_bv":2,"meets_bv":true})";
    CHECK(to_json(full_report(build_single_level(2, 1))).dump() == expected);
}

TEST_CASE("report text mirrors the JSON fields") {
    std::string text = report_to_text(full_report(build_single_level(4, 2)));
    CHECK(text == "n: 6\nk: 2\nd: 4\nspectrum: 0:1 4:3\n"
                  "constant_weight: true (weight 4)\nlinear: true\nd_bv: 4\nmeets_bv: true\n");
}

TEST_CASE("sim stats serialization carries the full config") {
    SimStats stats;
    stats.n = 6; stats.k = 2; stats.d = 4;
    stats.decoder = "ml";
    stats.p = 0.01;
    stats.trials = 1000;
    stats.seed = 7;
    stats.word_errors = 1;
    stats.wer = 0.001;
    stats.generator = "g";
    auto j = to_json(stats);
    CHECK(j["code"]["n"] == 6);
    CHECK(j["decoder"] == "ml");
    CHECK(j["seed"] == 7);
    CHECK(j["stage1_failures"] == 0);
}
