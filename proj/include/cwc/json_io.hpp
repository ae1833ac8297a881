#pragma once

#include <json.hpp>

#include "cwc/analyze.hpp"
#include "cwc/decode.hpp"
#include "cwc/oracle.hpp"
#include "cwc/tables.hpp"

namespace cwc {

// JSON mirrors the text output field for field; golden tests pin the JSON.

inline nlohmann::ordered_json to_json(const CodeReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["d"] = report.d;
    nlohmann::ordered_json spectrum;
    for (const auto& [w, count] : report.spectrum) spectrum[std::to_string(w)] = count;
    j["spectrum"] = spectrum;
    j["constant_weight"] = report.constant_weight;
    if (report.constant_weight_value) j["constant_weight_value"] = *report.constant_weight_value;
    j["linear"] = report.linear;
    if (report.d_bv) j["d_bv"] = *report.d_bv;
    if (report.meets_bv) j["meets_bv"] = *report.meets_bv;
    return j;
}

inline std::string report_to_text(const CodeReport& report) {
    std::string out;
    out += "n: " + std::to_string(report.n) + "\n";
    out += "k: " + std::to_string(report.k) + "\n";
    out += "d: " + std::to_string(report.d) + "\n";
    out += "spectrum:";
    for (const auto& [w, count] : report.spectrum)
        out += " " + std::to_string(w) + ":" + std::to_string(count);
    out += "\n";
    out += std::string("constant_weight: ") + (report.constant_weight ? "true" : "false");
    if (report.constant_weight_value)
        out += " (weight " + std::to_string(*report.constant_weight_value) + ")";
    out += "\n";
    out += std::string("linear: ") + (report.linear ? "true" : "false") + "\n";
    if (report.d_bv) {
        out += "d_bv: " + std::to_string(*report.d_bv) + "\n";
        out += std::string("meets_bv: ") + (*report.meets_bv ? "true" : "false") + "\n";
    }
    return out;
}

inline nlohmann::ordered_json to_json(const SimStats& stats) {
    nlohmann::ordered_json j;
    j["code"] = {{"n", stats.n}, {"k", stats.k}, {"d", stats.d}};
    j["decoder"] = stats.decoder;
    j["p"] = stats.p;
    j["trials"] = stats.trials;
    j["seed"] = stats.seed;
    j["word_errors"] = stats.word_errors;
    j["stage1_failures"] = stats.stage1_failures;
    j["stage2_failures"] = stats.stage2_failures;
    j["wer"] = stats.wer;
    j["generator"] = stats.generator;
    return j;
}

inline std::string stats_to_text(const SimStats& stats) {
    std::string out;
    out += "code: n=" + std::to_string(stats.n) + " k=" + std::to_string(stats.k) +
           " d=" + std::to_string(stats.d) + "\n";
    out += "decoder: " + stats.decoder + "\n";
    out += "p: " + std::to_string(stats.p) + "\n";
    out += "trials: " + std::to_string(stats.trials) + "\n";
    out += "seed: " + std::to_string(stats.seed) + "\n";
    out += "word_errors: " + std::to_string(stats.word_errors) + "\n";
    out += "stage1_failures: " + std::to_string(stats.stage1_failures) + "\n";
    out += "stage2_failures: " + std::to_string(stats.stage2_failures) + "\n";
    out += "wer: " + std::to_string(stats.wer) + "\n";
    out += "generator: " + stats.generator + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const RowCheck& row) {
    nlohmann::ordered_json j;
    j["label"] = row.label;
    if (!row.chain.empty()) j["chain"] = row.chain;
    j["expected"] = {{"n", row.expected_n}, {"k", row.expected_k}, {"d", row.expected_d}};
    if (row.expected_d_bv) j["expected"]["d_bv"] = *row.expected_d_bv;
    if (row.measured.n != 0) j["measured"] = to_json(row.measured);
    if (row.witness_count > 0 || !row.witnesses.empty()) {
        j["witness_count"] = row.witness_count;
        j["witnesses"] = row.witnesses;
    }
    j["ok"] = row.ok;
    return j;
}

inline nlohmann::ordered_json to_json(const TableCheck& check) {
    nlohmann::ordered_json j;
    j["table"] = check.table;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const RowCheck& row : check.rows) rows.push_back(to_json(row));
    j["rows"] = rows;
    j["all_ok"] = check.all_ok;
    return j;
}

inline nlohmann::ordered_json to_json(const ConjectureRow& row) {
    nlohmann::ordered_json j;
    j["label"] = row.label;
    if (!row.chain.empty()) j["chain"] = row.chain;
    j["expected"] = {{"n", row.expected_n}, {"k", row.expected_k}, {"d", row.expected_d}};
    j["measured"] = to_json(row.measured);
    if (row.oracle_certified)
        j["oracle_certified"] = *row.oracle_certified;
    else
        j["oracle_certified"] = "over-budget";
    j["ok"] = row.ok;
    return j;
}

inline nlohmann::ordered_json to_json(const ConjectureCheck& check) {
    nlohmann::ordered_json j;
    j["conjecture"] = check.conjecture;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ConjectureRow& row : check.rows) rows.push_back(to_json(row));
    j["rows"] = rows;
    j["all_ok"] = check.all_ok;
    return j;
}

inline nlohmann::ordered_json to_json(const SearchResult& result) {
    nlohmann::ordered_json j;
    j["n"] = result.n;
    j["k"] = result.k;
    j["constant_weight_only"] = result.restricted_to_constant_weight;
    j["best_d"] = result.best_d;
    j["search_space_size"] = result.search_space_size;
    if (result.witness) {
        nlohmann::ordered_json words = nlohmann::ordered_json::array();
        for (const Word& w : result.witness->words) words.push_back(w.str());
        j["witness"] = words;
    }
    return j;
}

}  // namespace cwc
