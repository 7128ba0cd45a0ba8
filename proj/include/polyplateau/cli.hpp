#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "counting.hpp"
#include "genfun.hpp"
#include "io.hpp"
#include "polyhypercube.hpp"
#include "verify.hpp"

namespace polyplateau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitDisagreement = 4;

// Node budget from POLYPLATEAU_BUDGET, falling back to the library default.
// A set-but-unparsable value is a hard error rather than a silent fallback.
inline long long env_node_budget() {
    const char* raw = std::getenv("POLYPLATEAU_BUDGET");
    if (raw == nullptr) return kDefaultNodeBudget;
    const std::string s(raw);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw std::domain_error("POLYPLATEAU_BUDGET must be a positive integer");
    return v;
}

namespace detail {

inline int checked_int(long long v, const char* what) {
    if (v > std::numeric_limits<int>::max())
        throw std::domain_error(std::string(what) + " is too large for enumeration");
    return static_cast<int>(v);
}

}  // namespace detail

// Runs one invocation against the given streams and returns the process exit
// code: 0 success, 2 domain/usage error, 3 budget refusal, 4 verification
// disagreement.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counting of directed plateau polyhypercubes"};
    app.name("polyplateau");
    app.require_subcommand(1);

    long long d = 0, k = 0, n = 0;
    std::string method = "closed";
    CLI::App* count = app.add_subcommand("count", "count objects for one (d, k, n)");
    count->add_option("-d", d, "dimension (>= 3)")->required();
    count->add_option("-k", k, "width: number of strata")->required();
    count->add_option("-n", n, "lateral area")->required();
    count->add_option("--method", method, "closed, conv, oracle or enum")
        ->check(CLI::IsMember({"closed", "conv", "oracle", "enum"}));

    long long table_d = 0, table_kmax = 0, table_nmax = 0;
    std::string table_format = "csv";
    CLI::App* table = app.add_subcommand("table", "tabulate counts for widths 1..kmax");
    table->add_option("-d", table_d, "dimension (>= 3)")->required();
    table->add_option("--kmax", table_kmax, "largest width")->required();
    table->add_option("--nmax", table_nmax, "largest lateral area")->required();
    table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    long long series_d = 0, series_k = 0, series_order = 0;
    std::string series_which = "total";
    std::string series_format = "plain";
    CLI::App* series = app.add_subcommand("series", "expand a generating function");
    series->add_option("-d", series_d, "dimension (>= 3)")->required();
    CLI::Option* series_k_opt = series->add_option("-k", series_k, "width, for --which fixed");
    series->add_option("--order", series_order, "highest power to expand to")->required();
    series->add_option("--which", series_which, "fixed (one width) or total (all widths)")
        ->required()
        ->check(CLI::IsMember({"fixed", "total"}));
    series->add_option("--format", series_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    long long enum_d = 0, enum_k = 0, enum_n = 0;
    std::string enum_format = "json";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list objects for one (d, k, n)");
    enumerate->add_option("-d", enum_d, "dimension (>= 3)")->required();
    enumerate->add_option("-k", enum_k, "width: number of strata")->required();
    enumerate->add_option("-n", enum_n, "lateral area")->required();
    enumerate->add_option("--format", enum_format, "json")->check(CLI::IsMember({"json"}));

    VerifyOptions vopt;
    long long verify_budget = 0;
    CLI::App* verify = app.add_subcommand("verify", "cross-check all pipelines over a grid");
    verify->add_option("--dmax", vopt.d_max, "largest dimension (default 5)");
    verify->add_option("--kmax", vopt.k_max, "largest width (default 3)");
    verify->add_option("--nmax", vopt.n_max, "largest lateral area (default 12)");
    CLI::Option* verify_budget_opt =
        verify->add_option("--oracle-budget", verify_budget, "search node budget");
    verify->add_flag("--self-test", vopt.inject_fault,
                     "corrupt one value to prove disagreement is detectable");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        const long long budget = env_node_budget();

        if (count->parsed()) {
            ::polyplateau::detail::validate_dpp_args(d, k, n);
            Integer result;
            if (method == "closed") {
                result = count_dpp_closed(d, k, n);
            } else if (method == "conv") {
                result = count_dpp_convolution(d, k, n);
            } else if (method == "oracle") {
                result = oracle_count_dpp(detail::checked_int(d, "-d"),
                                          detail::checked_int(k, "-k"),
                                          detail::checked_int(n, "-n"), budget);
            } else {
                result = Integer(enumerate_dpp(detail::checked_int(d, "-d"),
                                               detail::checked_int(k, "-k"),
                                               detail::checked_int(n, "-n"), budget)
                                     .size());
            }
            out << result.str() << '\n';
            return kExitOk;
        }

        if (table->parsed()) {
            const CountTable t = build_table(table_d, table_kmax, table_nmax);
            if (table_format == "csv")
                out << table_csv(t);
            else
                out << table_json(t).dump() << '\n';
            return kExitOk;
        }

        if (series->parsed()) {
            SeriesPrefix prefix;
            std::optional<long long> k_field;
            if (series_order < 0) throw std::domain_error("series: --order must be >= 0");
            if (series_which == "fixed") {
                if (series_k_opt->count() == 0)
                    throw std::domain_error("series: --which fixed requires -k");
                prefix = series_expand(
                    gf_fixed_width(detail::checked_int(series_d, "-d"),
                                   detail::checked_int(series_k, "-k")),
                    static_cast<int>(series_order));
                k_field = series_k;
            } else {
                if (series_k_opt->count() > 0)
                    throw std::domain_error("series: -k only applies to --which fixed");
                prefix = series_expand(gf_total(detail::checked_int(series_d, "-d")),
                                       static_cast<int>(series_order));
            }
            if (series_format == "plain")
                out << series_plain(prefix) << '\n';
            else
                out << series_json(prefix, series_d, k_field).dump() << '\n';
            return kExitOk;
        }

        if (enumerate->parsed()) {
            const std::vector<DirectedPlateauPolyhypercube> list =
                enumerate_dpp(detail::checked_int(enum_d, "-d"),
                              detail::checked_int(enum_k, "-k"),
                              detail::checked_int(enum_n, "-n"), budget);
            for (const DirectedPlateauPolyhypercube& p : list)
                out << strata_json(p).dump() << '\n';
            Json tail;
            tail["count"] = Integer(list.size()).str();
            out << tail.dump() << '\n';
            return kExitOk;
        }

        // verify
        vopt.node_budget = verify_budget_opt->count() > 0 ? verify_budget : budget;
        const VerifyReport report = run_verification(vopt);
        out << report_json(report).dump() << '\n';
        err << "checked " << report.cells.size() << " grid cells in " << report.wall_ms
            << " ms\n";
        return report.all_agree() ? kExitOk : kExitDisagreement;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace polyplateau::cli
