#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cwc/codebook.hpp"
#include "cwc/construct.hpp"
#include "cwc/decode.hpp"
#include "cwc/errors.hpp"
#include "cwc/json_io.hpp"
#include "cwc/oracle.hpp"
#include "cwc/tables.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct OutputSink {
    std::string format = "text";
    std::string out_path;

    bool json() const { return format == "json"; }

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw cwc::error("cannot open '" + out_path + "' for writing");
            out << text;
        }
    }
};

std::string config_echo(const std::string& args) { return "# cwc " + args + "\n"; }

// ---- construct ------------------------------------------------------------

cwc::Codebook build_from_spec(const std::string& spec) {
    if (spec.rfind("single:", 0) == 0) {
        int s1 = 0, h1 = 0;
        if (std::sscanf(spec.c_str(), "single:%d,%d", &s1, &h1) != 2)
            throw cwc::format_error("construct spec: expected single:<s1>,<h1>, got '" + spec + "'");
        return cwc::build_single_level(s1, h1);
    }
    if (spec.rfind("c3:", 0) == 0) {
        int nu = 0;
        unsigned poly = 0;
        if (std::sscanf(spec.c_str(), "c3:%d,%u", &nu, &poly) == 2)
            return cwc::build_c3(nu, poly);
        if (std::sscanf(spec.c_str(), "c3:%d", &nu) == 1) return cwc::build_c3(nu);
        throw cwc::format_error("construct spec: expected c3:<nu>[,<poly>], got '" + spec + "'");
    }
    // Component codes, mainly for feeding decode-sim --decoder staged.
    if (spec.rfind("rep:", 0) == 0) {
        int J = 0;
        if (std::sscanf(spec.c_str(), "rep:%d", &J) != 1)
            throw cwc::format_error("construct spec: expected rep:<J>, got '" + spec + "'");
        return cwc::repetition_code(J);
    }
    if (spec.rfind("simplex:", 0) == 0) {
        int nu = 0;
        unsigned poly = 0;
        if (std::sscanf(spec.c_str(), "simplex:%d,%u", &nu, &poly) == 2)
            return cwc::simplex_code(nu, poly);
        if (std::sscanf(spec.c_str(), "simplex:%d", &nu) == 1) return cwc::simplex_code(nu);
        throw cwc::format_error("construct spec: expected simplex:<nu>[,<poly>], got '" + spec + "'");
    }
    if (spec.rfind("c2:", 0) == 0) {
        int nu = 0;
        if (std::sscanf(spec.c_str(), "c2:%d", &nu) != 1)
            throw cwc::format_error("construct spec: expected c2:<nu>, got '" + spec + "'");
        cwc::Codebook u = cwc::simplex_code(nu);
        return cwc::build_c2(u, cwc::repetition_code(u.n));
    }
    return cwc::build_chain(cwc::parse_chain(spec));
}

// The codebook file is the command's artifact, so --out names its
// destination; the measured report always goes to stdout.
int cmd_construct(const std::string& spec, const OutputSink& sink) {
    cwc::Codebook code = build_from_spec(spec);
    cwc::CodeReport report = cwc::full_report(code);
    if (!sink.out_path.empty()) cwc::save_codebook(sink.out_path, code);

    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "construct"}, {"spec", spec}};
        j["report"] = cwc::to_json(report);
        if (sink.out_path.empty())
            j["codebook"] = [&] {
                ordered_json rows = ordered_json::array();
                for (const cwc::Word& w : code.words) rows.push_back(w.str());
                return rows;
            }();
        else
            j["codebook_file"] = sink.out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::string text = config_echo("construct " + spec);
        text += cwc::report_to_text(report);
        if (sink.out_path.empty()) {
            text += "\n" + cwc::to_text(code);
        } else {
            text += "codebook_file: " + sink.out_path + "\n";
        }
        std::cout << text;
    }
    return kExitOk;
}

// ---- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& file, const OutputSink& sink) {
    cwc::CodeReport report = cwc::full_report(cwc::load_codebook(file));
    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "analyze"}, {"file", file}};
        j["report"] = cwc::to_json(report);
        sink.emit(j.dump(2) + "\n");
    } else {
        sink.emit(config_echo("analyze " + file) + cwc::report_to_text(report));
    }
    return kExitOk;
}

// ---- decode-sim -------------------------------------------------------------

int cmd_decode_sim(const std::string& file, const std::string& decoder, const std::string& u_file,
                   const std::string& v_file, double p, long long trials, std::uint64_t seed,
                   const OutputSink& sink) {
    cwc::Codebook code = cwc::load_codebook(file);
    cwc::SimStats stats;
    if (decoder == "ml") {
        stats = cwc::channel_simulate_ml(code, p, trials, seed);
    } else if (decoder == "staged") {
        if (u_file.empty() || v_file.empty())
            throw cwc::parameter_error("staged decoder needs --u and --v component codebooks");
        stats = cwc::channel_simulate_staged(code, cwc::load_codebook(u_file),
                                             cwc::load_codebook(v_file), p, trials, seed);
    } else {
        throw cwc::parameter_error("decoder must be ml or staged");
    }

    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "decode-sim"}, {"file", file}, {"decoder", decoder},
                       {"p", p},   {"trials", trials},           {"seed", seed}};
        j["stats"] = cwc::to_json(stats);
        sink.emit(j.dump(2) + "\n");
    } else {
        sink.emit(config_echo("decode-sim " + file + " --decoder " + decoder) +
                  cwc::stats_to_text(stats));
    }
    return kExitOk;
}

// ---- tables -----------------------------------------------------------------

std::string row_to_text(const cwc::RowCheck& row) {
    std::string line = row.label + " | expected n=" + std::to_string(row.expected_n);
    if (row.expected_k) line += " k=" + std::to_string(row.expected_k);
    line += " d=" + std::to_string(row.expected_d);
    if (row.expected_d_bv) line += " d_bv=" + std::to_string(*row.expected_d_bv);
    if (row.measured.n != 0) {
        line += " | measured n=" + std::to_string(row.measured.n) +
                " k=" + std::to_string(row.measured.k) + " d=" + std::to_string(row.measured.d);
        line += row.measured.constant_weight ? " cw" : " not-cw";
        line += row.measured.linear ? " linear" : " not-linear";
    }
    if (row.witness_count > 0) {
        line += " | witnesses " + std::to_string(row.witness_count);
        if (!row.witnesses.empty()) line += " e.g. " + row.witnesses.front();
    } else if (!row.chain.empty()) {
        line += " | chain " + row.chain;
    }
    line += row.ok ? " | OK" : " | MISMATCH";
    return line + "\n";
}

int cmd_tables(int which, const cwc::ChainSearchLimits& limits, const OutputSink& sink) {
    cwc::TableCheck check = cwc::verify_table(which, limits);
    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "tables"}, {"table", which}};
        j.update(cwc::to_json(check));
        sink.emit(j.dump(2) + "\n");
    } else {
        std::string text = config_echo("tables " + std::to_string(which));
        for (const cwc::RowCheck& row : check.rows) text += row_to_text(row);
        text += std::string("all_ok: ") + (check.all_ok ? "true" : "false") + "\n";
        sink.emit(text);
    }
    return check.all_ok ? kExitOk : kExitMismatch;
}

// ---- conjecture ---------------------------------------------------------------

int cmd_conjecture(const std::string& which, int range, unsigned long long budget,
                   const OutputSink& sink) {
    int number = 0;
    if (which == "I" || which == "1") number = 1;
    else if (which == "II" || which == "2") number = 2;
    else if (which == "III" || which == "3") number = 3;
    else throw cwc::parameter_error("conjecture must be I, II or III");

    cwc::ConjectureCheck check = cwc::verify_conjecture(number, range, budget);
    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "conjecture"}, {"which", which}, {"range", range}};
        j.update(cwc::to_json(check));
        sink.emit(j.dump(2) + "\n");
    } else {
        std::string text = config_echo("conjecture " + which + " " + std::to_string(range));
        for (const cwc::ConjectureRow& row : check.rows) {
            text += row.label + " | expected (" + std::to_string(row.expected_n) + "," +
                    std::to_string(row.expected_k) + "," + std::to_string(row.expected_d) +
                    ") | measured (" + std::to_string(row.measured.n) + "," +
                    std::to_string(row.measured.k) + "," + std::to_string(row.measured.d) + ")";
            text += row.measured.constant_weight ? " cw" : " not-cw";
            if (row.measured.d_bv)
                text += row.measured.meets_bv.value_or(false) ? " meets_bv" : " misses_bv";
            if (row.oracle_certified)
                text += *row.oracle_certified ? " certified" : " refuted";
            else
                text += " oracle-over-budget";
            text += row.ok ? " | OK" : " | MISMATCH";
            text += "\n";
        }
        text += std::string("all_ok: ") + (check.all_ok ? "true" : "false") + "\n";
        sink.emit(text);
    }
    return check.all_ok ? kExitOk : kExitMismatch;
}

// ---- oracle --------------------------------------------------------------------

int cmd_oracle_best(int n, int k, bool constant_weight, unsigned long long budget,
                    const OutputSink& sink, const std::string& witness_out) {
    cwc::SearchResult result = cwc::best_linear_code(n, k, constant_weight, budget);
    if (!witness_out.empty() && result.witness) cwc::save_codebook(witness_out, *result.witness);
    std::optional<int> bv = cwc::bv_lookup(n, k);

    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "oracle best"}, {"n", n}, {"k", k},
                       {"constant_weight", constant_weight}, {"budget", budget}};
        j["result"] = cwc::to_json(result);
        if (bv) {
            j["d_bv"] = *bv;
            j["matches_bv"] = (result.best_d == *bv);
        }
        sink.emit(j.dump(2) + "\n");
    } else {
        std::string text = config_echo("oracle best " + std::to_string(n) + " " + std::to_string(k) +
                                       (constant_weight ? " --constant-weight" : ""));
        text += "best_d: " + std::to_string(result.best_d) + "\n";
        text += "search_space_size: " + std::to_string(result.search_space_size) + "\n";
        if (bv)
            text += "d_bv: " + std::to_string(*bv) +
                    (result.best_d == *bv ? " (matches)" : " (differs)") + "\n";
        if (result.witness) text += "witness:\n" + cwc::to_text(*result.witness);
        sink.emit(text);
    }
    return kExitOk;
}

int cmd_oracle_bv(int n, int k, const OutputSink& sink) {
    std::optional<int> bv = cwc::bv_lookup(n, k);
    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "oracle bv"}, {"n", n}, {"k", k}};
        if (bv)
            j["d_bv"] = *bv;
        else
            j["d_bv"] = nullptr;
        sink.emit(j.dump(2) + "\n");
    } else {
        std::string text = config_echo("oracle bv " + std::to_string(n) + " " + std::to_string(k));
        text += "d_bv: " + (bv ? std::to_string(*bv) : std::string("absent")) + "\n";
        sink.emit(text);
    }
    return kExitOk;
}

int cmd_oracle_chain_search(int n, int d, const cwc::ChainSearchLimits& limits,
                            const OutputSink& sink) {
    cwc::ChainSearchOutcome outcome = cwc::chain_search(n, d, limits);
    if (sink.json()) {
        ordered_json j;
        j["config"] = {{"command", "oracle chain-search"}, {"n", n}, {"d", d},
                       {"max_levels", limits.max_levels}, {"max_s", limits.max_s},
                       {"max_h", limits.max_h}};
        ordered_json witnesses = ordered_json::array();
        for (const cwc::ChainSpec& chain : outcome.witnesses) witnesses.push_back(cwc::to_string(chain));
        j["witnesses"] = witnesses;
        j["nodes"] = outcome.nodes;
        j["candidates"] = outcome.candidates;
        sink.emit(j.dump(2) + "\n");
    } else {
        std::string text = config_echo("oracle chain-search " + std::to_string(n) + " " + std::to_string(d));
        text += "witnesses: " + std::to_string(outcome.witnesses.size()) + "\n";
        for (const cwc::ChainSpec& chain : outcome.witnesses) text += "  " + cwc::to_string(chain) + "\n";
        text += "nodes: " + std::to_string(outcome.nodes) + "\n";
        text += "candidates: " + std::to_string(outcome.candidates) + "\n";
        sink.emit(text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for stacked constant-weight codes over GF(2): construction, exact "
                 "analysis, two-stage decoding, and exhaustive optimality checks"};
    app.require_subcommand(1);

    OutputSink sink;
    app.add_option("--format", sink.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", sink.out_path, "Write output to a file instead of stdout");

    // construct
    std::string spec;
    CLI::App* construct = app.add_subcommand("construct", "Build a codebook from a spec string");
    construct->add_option("spec", spec,
                          "chain 's,h[,a,b];...' | 'c3:<nu>[,<poly>]' | 'single:<s1>,<h1>' | "
                          "'c2:<nu>' | 'simplex:<nu>[,<poly>]' | 'rep:<J>'")
        ->required();

    // analyze
    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "Measure a codebook file");
    analyze->add_option("file", analyze_file, "Codebook file")->required();

    // decode-sim
    std::string sim_file, sim_decoder = "ml", sim_u, sim_v;
    double sim_p = 0.0;
    long long sim_trials = 1000;
    std::uint64_t sim_seed = 1;
    CLI::App* decode_sim = app.add_subcommand("decode-sim", "Seeded channel simulation");
    decode_sim->add_option("file", sim_file, "Codebook file")->required();
    decode_sim->add_option("--decoder", sim_decoder, "ml | staged");
    decode_sim->add_option("--u", sim_u, "Component u codebook (staged)");
    decode_sim->add_option("--v", sim_v, "Component v codebook (staged)");
    decode_sim->add_option("--p", sim_p, "Bit flip probability");
    decode_sim->add_option("--trials", sim_trials, "Number of trials");
    decode_sim->add_option("--seed", sim_seed, "Generator seed");

    // tables
    int table_number = 0;
    cwc::ChainSearchLimits limits;
    CLI::App* tables = app.add_subcommand("tables", "Rebuild and verify a bundled table");
    tables->add_option("which", table_number, "Table number 1..5")->required();
    tables->add_option("--max-levels", limits.max_levels, "Chain search: level cap");
    tables->add_option("--max-s", limits.max_s, "Chain search: copy count cap");
    tables->add_option("--max-h", limits.max_h, "Chain search: pad cap");
    tables->add_option("--budget", limits.node_budget, "Chain search: node budget");

    // conjecture
    std::string conjecture_which;
    int conjecture_range = 1;
    unsigned long long search_budget = cwc::default_search_budget;
    CLI::App* conjecture = app.add_subcommand("conjecture", "Sweep one of the three conjectures");
    conjecture->add_option("which", conjecture_which, "I | II | III")->required();
    conjecture->add_option("range", conjecture_range, "Sweep range")->required();
    conjecture->add_option("--budget", search_budget, "Exact-search budget per row");

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive ground-truth searches");
    oracle->require_subcommand(1);
    int on = 0, ok_ = 0, od = 0;
    bool oracle_cw = false;
    std::string witness_out;
    cwc::ChainSearchLimits oracle_limits;
    CLI::App* oracle_best = oracle->add_subcommand("best", "Best linear code at (n, k)");
    oracle_best->add_option("n", on, "Code length")->required();
    oracle_best->add_option("k", ok_, "Information symbols (<= 4)")->required();
    oracle_best->add_flag("--constant-weight", oracle_cw, "Restrict to constant-weight codes");
    oracle_best->add_option("--budget", search_budget, "Multiset budget");
    oracle_best->add_option("--witness-out", witness_out, "Write the witness codebook here");
    CLI::App* oracle_bv = oracle->add_subcommand("bv", "Bundled best-known distance at (n, k)");
    oracle_bv->add_option("n", on, "Code length")->required();
    oracle_bv->add_option("k", ok_, "Information symbols")->required();
    CLI::App* oracle_chain = oracle->add_subcommand("chain-search", "Chains measuring exactly (n, d)");
    oracle_chain->add_option("n", on, "Target length")->required();
    oracle_chain->add_option("d", od, "Target distance")->required();
    oracle_chain->add_option("--max-levels", oracle_limits.max_levels, "Level cap");
    oracle_chain->add_option("--max-s", oracle_limits.max_s, "Copy count cap");
    oracle_chain->add_option("--max-h", oracle_limits.max_h, "Pad cap");
    oracle_chain->add_option("--budget", oracle_limits.node_budget, "Node budget");

    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(spec, sink);
        if (analyze->parsed()) return cmd_analyze(analyze_file, sink);
        if (decode_sim->parsed())
            return cmd_decode_sim(sim_file, sim_decoder, sim_u, sim_v, sim_p, sim_trials, sim_seed, sink);
        if (tables->parsed()) return cmd_tables(table_number, limits, sink);
        if (conjecture->parsed())
            return cmd_conjecture(conjecture_which, conjecture_range, search_budget, sink);
        if (oracle->parsed()) {
            if (oracle_best->parsed()) return cmd_oracle_best(on, ok_, oracle_cw, search_budget, sink, witness_out);
            if (oracle_bv->parsed()) return cmd_oracle_bv(on, ok_, sink);
            if (oracle_chain->parsed()) return cmd_oracle_chain_search(on, od, oracle_limits, sink);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
