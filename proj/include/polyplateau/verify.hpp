#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "counting.hpp"
#include "genfun.hpp"
#include "io.hpp"
#include "polyhypercube.hpp"

namespace polyplateau {

// Grid over which the independent pipelines are compared. The oracle bounds
// cap the brute-force search separately from the cheap pipelines; outside
// them the oracle column is simply absent.
struct VerifyOptions {
    int d_max = 5;
    int k_max = 3;
    int n_max = 12;
    int oracle_d_max = 4;
    int oracle_k_max = 3;
    int oracle_n_max = 8;
    long long node_budget = kDefaultNodeBudget;
    bool inject_fault = false;
};

struct VerifyCell {
    int d = 0;
    int k = 0;
    int n = 0;
    Integer closed_form;
    Integer convolution;
    Integer gf_coefficient;
    Integer enumerator;
    std::optional<Integer> oracle;
    bool agree = false;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyCell> cells;
    long long pass = 0;
    long long fail = 0;
    long long wall_ms = 0;  // measured, but kept out of the serialized report

    bool all_agree() const { return fail == 0; }
};

// Recompute every grid cell through four (plus optionally the oracle)
// independent pipelines and compare. inject_fault deliberately corrupts one
// value after computation, to prove the comparison can fail.
inline VerifyReport run_verification(const VerifyOptions& opt) {
    if (opt.d_max < 3) throw std::domain_error("verify: dmax must be >= 3");
    if (opt.k_max < 1) throw std::domain_error("verify: kmax must be >= 1");
    if (opt.n_max < 0) throw std::domain_error("verify: nmax must be >= 0");
    if (opt.node_budget < 1) throw std::domain_error("verify: node budget must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.options = opt;

    for (int d = 3; d <= opt.d_max; ++d) {
        for (int k = 1; k <= opt.k_max; ++k) {
            const SeriesPrefix series = series_expand(gf_fixed_width(d, k), opt.n_max);
            for (int n = 0; n <= opt.n_max; ++n) {
                VerifyCell cell;
                cell.d = d;
                cell.k = k;
                cell.n = n;
                cell.closed_form = count_dpp_closed(d, k, n);
                cell.convolution = count_dpp_convolution(d, k, n);
                cell.gf_coefficient = series.coeffs[static_cast<std::size_t>(n)];
                cell.enumerator =
                    Integer(enumerate_dpp(d, k, n, opt.node_budget).size());
                if (d <= opt.oracle_d_max && k <= opt.oracle_k_max && n <= opt.oracle_n_max)
                    cell.oracle = oracle_count_dpp(d, k, n, opt.node_budget);
                report.cells.push_back(std::move(cell));
            }
        }
    }

    if (opt.inject_fault && !report.cells.empty()) report.cells.front().closed_form += 1;

    for (VerifyCell& cell : report.cells) {
        cell.agree = cell.closed_form == cell.convolution &&
                     cell.closed_form == cell.gf_coefficient &&
                     cell.closed_form == cell.enumerator &&
                     (!cell.oracle || cell.closed_form == *cell.oracle);
        (cell.agree ? report.pass : report.fail) += 1;
    }

    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

inline Json report_json(const VerifyReport& r) {
    Json grid;
    grid["dmax"] = r.options.d_max;
    grid["kmax"] = r.options.k_max;
    grid["nmax"] = r.options.n_max;
    grid["oracle_dmax"] = r.options.oracle_d_max;
    grid["oracle_kmax"] = r.options.oracle_k_max;
    grid["oracle_nmax"] = r.options.oracle_n_max;
    grid["node_budget"] = r.options.node_budget;
    grid["fault_injection"] = r.options.inject_fault;

    Json cells = Json::array();
    for (const VerifyCell& c : r.cells) {
        Json j;
        j["d"] = c.d;
        j["k"] = c.k;
        j["n"] = c.n;
        j["closed_form"] = c.closed_form.str();
        j["convolution"] = c.convolution.str();
        j["gf_coefficient"] = c.gf_coefficient.str();
        j["enumerator"] = c.enumerator.str();
        j["oracle"] = c.oracle ? Json(c.oracle->str()) : Json(nullptr);
        j["agree"] = c.agree;
        cells.push_back(std::move(j));
    }

    Json summary;
    summary["pass"] = r.pass;
    summary["fail"] = r.fail;

    Json out;
    out["grid"] = std::move(grid);
    out["cells"] = std::move(cells);
    out["summary"] = std::move(summary);
    return out;
}

}  // namespace polyplateau
