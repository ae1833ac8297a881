#include "cwc/tables.hpp"

#include "cwc/errors.hpp"

namespace cwc {

ChainSpec k3_constant_weight_chain(int s2) {
    if (s2 < 2 || s2 % 2 != 0) throw parameter_error("k=3 family chain needs an even s2 >= 2");
    return ChainSpec{{make_level(2, 1), make_level(s2, s2 / 2)}};
}

ChainSpec doubling_chain(int k) {
    if (k < 2) throw parameter_error("doubling chain needs k >= 2");
    ChainSpec chain{{make_level(2, 1)}};
    if (k >= 3) chain.levels.push_back(make_level(4, 2));
    for (int i = 3; i < k; ++i) chain.levels.push_back(make_level(2, 2));
    return chain;
}

namespace {

RowCheck check_code_row(std::string label, std::string chain_text, const Codebook& code,
                        int n, int k, int d, std::optional<int> d_bv, bool require_cw) {
    RowCheck row;
    row.label = std::move(label);
    row.chain = std::move(chain_text);
    row.expected_n = n;
    row.expected_k = k;
    row.expected_d = d;
    row.expected_d_bv = d_bv;
    row.require_constant_weight = require_cw;
    row.measured = full_report(code);
    row.ok = row.measured.n == n && row.measured.k == k && row.measured.d == d &&
             row.measured.linear;
    if (require_cw) row.ok = row.ok && row.measured.constant_weight;
    if (d_bv) row.ok = row.ok && row.measured.d_bv && *row.measured.d_bv == *d_bv &&
                       row.measured.meets_bv.value_or(false);
    return row;
}

RowCheck check_chain_row(const ChainSpec& chain, int n, int k, int d, std::optional<int> d_bv,
                         bool require_cw) {
    std::string text = to_string(chain);
    return check_code_row(text, text, build_chain(chain), n, k, d, d_bv, require_cw);
}

}  // namespace

TableCheck verify_table(int which, const ChainSearchLimits& limits) {
    TableCheck check;
    check.table = which;

    switch (which) {
        case 1: {
            // Three-block stacks over the degree-nu simplex code.
            struct T1Row { int nu, n1, k, d; };
            constexpr T1Row rows[] = {{2, 9, 3, 4}, {3, 21, 4, 10}, {4, 45, 5, 22}, {5, 93, 6, 46}};
            for (const T1Row& r : rows)
                check.rows.push_back(check_code_row("c3 nu=" + std::to_string(r.nu), "",
                                                    build_c3(r.nu), r.n1, r.k, r.d, r.d, false));
            break;
        }
        case 2: {
            // k=2 family for every h in 1..42; best-known values are printed
            // for eight rows only.
            for (int h = 1; h <= 42; ++h) {
                std::optional<int> d_bv;
                if (h <= 4 || h >= 39) d_bv = 2 * h;
                check.rows.push_back(check_code_row(
                    "single s1=" + std::to_string(2 * h) + " h1=" + std::to_string(h), "",
                    build_single_level(2 * h, h), 3 * h, 2, 2 * h, d_bv, true));
            }
            break;
        }
        case 3: {
            for (int s2 = 2; s2 <= 36; s2 += 2)
                check.rows.push_back(
                    check_chain_row(k3_constant_weight_chain(s2), 7 * s2 / 2, 3, 2 * s2, 2 * s2, true));
            break;
        }
        case 4: {
            // The printed per-level parameters of this table do not reproduce
            // its own (n, d) column under the length recurrence, so each row
            // is matched by witness search over all splits and pads instead.
            struct T4Row { int n, d; };
            constexpr T4Row rows[] = {{3, 2},   {10, 5},  {11, 6},  {22, 11}, {23, 12},
                                      {46, 23}, {47, 24}, {94, 47}, {95, 48}};
            for (const T4Row& r : rows) {
                RowCheck row;
                row.label = "target n=" + std::to_string(r.n) + " d=" + std::to_string(r.d);
                row.expected_n = r.n;
                row.expected_d = r.d;
                ChainSearchOutcome outcome = chain_search(r.n, r.d, limits);
                row.witness_count = static_cast<long long>(outcome.witnesses.size());
                for (std::size_t i = 0; i < outcome.witnesses.size() && i < 4; ++i)
                    row.witnesses.push_back(to_string(outcome.witnesses[i]));
                if (!outcome.witnesses.empty()) {
                    const ChainSpec& first = outcome.witnesses.front();
                    Codebook code = build_chain(first);
                    row.chain = to_string(first);
                    row.measured = full_report(code);
                    row.expected_k = row.measured.k;  // the table prints no per-row k
                    row.expected_d_bv = bv_lookup(r.n, row.measured.k);
                    row.ok = row.measured.n == r.n && row.measured.d == r.d;
                } else {
                    row.ok = false;
                }
                check.rows.push_back(row);
            }
            break;
        }
        case 5: {
            // The n = 2^(k+1) - 2, d = 2^k pattern starts at k=3; the k=2 row
            // is the smallest single-level code.
            struct T5Row { int k, n, d; };
            constexpr T5Row rows[] = {{2, 3, 2}, {3, 14, 8}, {4, 30, 16}, {5, 62, 32}, {6, 126, 64}};
            for (const T5Row& r : rows) {
                RowCheck row = check_chain_row(doubling_chain(r.k), r.n, r.k, r.d, r.d, true);
                // weight must equal the minimum distance on every row
                row.ok = row.ok && row.measured.constant_weight_value &&
                         *row.measured.constant_weight_value == r.d;
                check.rows.push_back(row);
            }
            break;
        }
        default:
            throw parameter_error("table number must be 1..5");
    }

    check.all_ok = true;
    for (const RowCheck& row : check.rows) check.all_ok = check.all_ok && row.ok;
    return check;
}

ConjectureCheck verify_conjecture(int which, int range, unsigned long long budget) {
    if (range < 1) throw parameter_error("conjecture range must be >= 1");
    ConjectureCheck check;
    check.conjecture = which;

    auto certify = [&](int n, int k, int d) -> std::optional<bool> {
        if (k > 4 || column_multiset_count(n, k) > budget) return std::nullopt;
        return best_linear_code(n, k, true, budget).best_d == d;
    };

    auto push_row = [&](std::string label, std::string chain_text, const Codebook& code, int n,
                        int k, int d) {
        ConjectureRow row;
        row.label = std::move(label);
        row.chain = std::move(chain_text);
        row.expected_n = n;
        row.expected_k = k;
        row.expected_d = d;
        row.measured = full_report(code);
        row.ok = row.measured.n == n && row.measured.k == k && row.measured.d == d &&
                 row.measured.linear && row.measured.constant_weight &&
                 row.measured.constant_weight_value &&
                 *row.measured.constant_weight_value == d;
        if (row.measured.d_bv) row.ok = row.ok && row.measured.meets_bv.value_or(false);
        row.oracle_certified = certify(n, k, d);
        if (row.oracle_certified) row.ok = row.ok && *row.oracle_certified;
        check.rows.push_back(std::move(row));
    };

    switch (which) {
        case 1:
            for (int h = 1; h <= range; ++h)
                push_row("h1=" + std::to_string(h), "", build_single_level(2 * h, h), 3 * h, 2,
                         2 * h);
            break;
        case 2:
            for (int h = 1; h <= range; ++h) {
                ChainSpec chain = k3_constant_weight_chain(2 * h);
                push_row("h1=" + std::to_string(h), to_string(chain), build_chain(chain), 7 * h, 3,
                         4 * h);
            }
            break;
        case 3:
            for (int k = 3; k <= range; ++k) {
                ChainSpec chain = doubling_chain(k);
                push_row("k=" + std::to_string(k), to_string(chain), build_chain(chain),
                         (1 << (k + 1)) - 2, k, 1 << k);
            }
            break;
        default:
            throw parameter_error("conjecture number must be 1..3");
    }

    check.all_ok = true;
    for (const ConjectureRow& row : check.rows) check.all_ok = check.all_ok && row.ok;
    return check;
}

}  // namespace cwc
