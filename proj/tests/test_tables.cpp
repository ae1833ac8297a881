#include <doctest.h>

#include "cwc/tables.hpp"

using namespace cwc;

TEST_CASE("bundled tables reproduce") {
    for (int table : {1, 2, 3, 5}) {
        TableCheck check = verify_table(table);
        for (const RowCheck& row : check.rows) {
            INFO("table ", table, " row ", row.label);
            CHECK(row.ok);
        }
        CHECK(check.all_ok);
    }
}

TEST_CASE("table 4 targets all have witnesses") {
    TableCheck check = verify_table(4);
    REQUIRE(check.rows.size() == 9);
    for (const RowCheck& row : check.rows) {
        INFO(row.label);
        CHECK(row.witness_count > 0);
        CHECK(row.ok);
    }
    CHECK(check.all_ok);
}

TEST_CASE("closed form equals measurement on every bundled chain") {
    std::vector<ChainSpec> chains;
    for (int s2 = 2; s2 <= 36; s2 += 2) chains.push_back(k3_constant_weight_chain(s2));
    for (int k = 2; k <= 6; ++k) chains.push_back(doubling_chain(k));
    TableCheck t4 = verify_table(4);
    for (const RowCheck& row : t4.rows)
        if (!row.chain.empty()) chains.push_back(parse_chain(row.chain));

    for (const ChainSpec& chain : chains) {
        PredictedParams predicted = predict_params(chain);
        CodeReport measured = full_report(build_chain(chain));
        INFO(to_string(chain));
        CHECK(predicted.n == measured.n);
        CHECK(predicted.k == measured.k);
        CHECK(predicted.d_lower == measured.d);
    }
}

TEST_CASE("conjecture sweeps") {
    ConjectureCheck one = verify_conjecture(1, 12);
    CHECK(one.rows.size() == 12);
    CHECK(one.all_ok);
    for (const ConjectureRow& row : one.rows) CHECK(row.oracle_certified == true);

    ConjectureCheck two = verify_conjecture(2, 4);
    CHECK(two.all_ok);

    ConjectureCheck three = verify_conjecture(3, 6);
    CHECK(three.rows.size() == 4);  // k = 3..6
    CHECK(three.all_ok);
}
