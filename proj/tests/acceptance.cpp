// End-to-end acceptance checks. Each check prints one [PASS]/[FAIL] line;
// the process exits nonzero if any check fails. All comparisons are exact.

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <polyplateau/cli.hpp>
#include <polyplateau/counting.hpp>
#include <polyplateau/genfun.hpp>
#include <polyplateau/polyhypercube.hpp>
#include <polyplateau/polyomino.hpp>

#include "test_support.hpp"

namespace {

using namespace polyplateau;

// 1. Filter a generic brute-force universe of 2D cell sets down to directed
// column-convex ones and compare per-width counts with the closed form.
bool check_generic_2d_counts() {
    for (int n = 1; n <= 8; ++n) {
        std::map<int, Integer> by_width;
        for (const CellSet2D& s : testsupport::all_fixed_polyominoes(n))
            if (is_column_convex(s) && is_directed(s))
                by_width[testsupport::cellset_width(s)] += 1;
        for (int k = 1; k <= n; ++k) {
            Integer got = 0;
            if (auto it = by_width.find(k); it != by_width.end()) got = it->second;
            if (got != count_dccp(k, n)) return false;
        }
    }
    return true;
}

// 2. Map every brute-force object to its tuple of lateral projections and
// check the map is a bijection onto tuples of directed column stacks.
bool check_projection_bijection() {
    for (int d = 3; d <= 4; ++d) {
        for (int k = 1; k <= 3; ++k) {
            for (int n = 0; n <= 8; ++n) {
                const std::vector<CellSetD> objects = oracle_enumerate_dpp(d, k, n);
                std::set<std::vector<CellSet2D>> actual;
                for (const CellSetD& c : objects) {
                    std::vector<CellSet2D> tuple;
                    for (int axis = 2; axis <= d; ++axis)
                        tuple.push_back(canonical_translate(project_cells(c, axis)));
                    actual.insert(std::move(tuple));
                }
                if (actual.size() != objects.size()) return false;  // not injective

                std::set<std::vector<CellSet2D>> expected;
                std::vector<CellSet2D> partial(d - 1);
                auto fill = [&](auto&& self, int axis, int remaining) -> void {
                    if (axis == d - 1) {
                        if (remaining == 0) expected.insert(partial);
                        return;
                    }
                    for (int j = k; j <= remaining; ++j)
                        for (const ColumnConvexPolyomino& p : enumerate_dccp(k, j)) {
                            partial[axis] = canonical_translate(rasterize(p));
                            self(self, axis + 1, remaining - j);
                        }
                };
                fill(fill, 0, n);
                if (actual != expected) return false;  // not surjective
            }
        }
    }
    return true;
}

// 3. Convolution of per-axis counts equals the closed form over a wide grid.
bool check_convolution_closed_agreement() {
    for (long long d = 3; d <= 6; ++d)
        for (long long k = 1; k <= 4; ++k)
            for (long long n = 0; n <= 30; ++n)
                if (count_dpp_convolution(d, k, n) != count_dpp_closed(d, k, n)) return false;
    return true;
}

// 4. Definition-level brute force agrees with the closed form, including a
// few hand-checked anchor values.
bool check_oracle_agreement() {
    if (oracle_count_dpp(3, 2, 5) != 6) return false;
    if (oracle_count_dpp(4, 1, 5) != 6) return false;
    for (int n = 2; n <= 8; ++n)
        if (oracle_count_dpp(3, 1, n) != n - 1) return false;
    for (int d = 3; d <= 4; ++d)
        for (int k = 1; k <= 3; ++k)
            for (int n = 0; n <= 8; ++n)
                if (oracle_count_dpp(d, k, n) != count_dpp_closed(d, k, n)) return false;
    return true;
}

// 5. The binomial convolution identity behind the closed form.
bool check_binomial_identity() {
    for (long long x = 0; x <= 20; ++x)
        for (long long y = 0; y <= 20; ++y)
            for (long long n = 0; n <= 20; ++n)
                if (vandermonde_lhs(x, y, n) != binomial(x + y + n + 1, n)) return false;
    return true;
}

// 6. Fixed-width series coefficients reproduce the closed counts.
bool check_fixed_width_series() {
    for (int d = 3; d <= 5; ++d)
        for (int k = 1; k <= 3; ++k) {
            const SeriesPrefix s = series_expand(gf_fixed_width(d, k), 30);
            for (int n = 0; n <= 30; ++n)
                if (s.coeffs[static_cast<std::size_t>(n)] != count_dpp_closed(d, k, n))
                    return false;
        }
    return true;
}

// 7. The all-widths series sums the per-width counts; its 3D prefix is the
// documented 0, 0, 1, 2, 4, 10, 27.
bool check_total_series() {
    const SeriesPrefix d3 = series_expand(gf_total(3), 6);
    if (d3.coeffs != std::vector<Integer>{0, 0, 1, 2, 4, 10, 27}) return false;
    for (int d = 3; d <= 5; ++d) {
        const SeriesPrefix s = series_expand(gf_total(d), 25);
        for (int n = 0; n <= 25; ++n) {
            Integer total = 0;
            for (int k = 1; k <= n; ++k) total += count_dpp_closed(d, k, n);
            if (s.coeffs[static_cast<std::size_t>(n)] != total) return false;
        }
    }
    return true;
}

// 8. Raising the dimension by one equals convolving with one more axis.
bool check_dimension_step() {
    for (long long d = 3; d <= 5; ++d)
        for (long long k = 1; k <= 3; ++k)
            for (long long n = 0; n <= 20; ++n) {
                Integer stepped = 0;
                for (long long j = 1; j <= n; ++j)
                    stepped += count_dccp(k, j) * count_dpp_closed(d, k, n - j);
                if (stepped != count_dpp_closed(d + 1, k, n)) return false;
            }
    return true;
}

// 9. The verify command exits 0 on the default grid and nonzero with a
// deliberately injected fault.
bool check_verify_command() {
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run({"verify"}, out, err) != 0) return false;
    const auto report = nlohmann::json::parse(out.str());
    if (report.at("summary").at("fail") != 0) return false;

    std::ostringstream out2;
    std::ostringstream err2;
    const int faulty =
        cli::run({"verify", "--dmax", "3", "--kmax", "1", "--nmax", "4", "--self-test"}, out2,
                 err2);
    return faulty != 0;
}

}  // namespace

int main() {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const std::vector<Check> checks = {
        {"generic 2D brute force matches the column-stack counts", &check_generic_2d_counts},
        {"projection tuples biject onto column-stack products", &check_projection_bijection},
        {"convolution and closed-form counts agree", &check_convolution_closed_agreement},
        {"definition-level oracle agrees with the closed form", &check_oracle_agreement},
        {"binomial convolution identity holds", &check_binomial_identity},
        {"fixed-width series reproduces the counts", &check_fixed_width_series},
        {"total series sums the per-width counts", &check_total_series},
        {"dimension step replays as one more convolution", &check_dimension_step},
        {"verify command: clean pass, detected fault", &check_verify_command},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        bool ok = false;
        try {
            ok = checks[i].fn();
        } catch (const std::exception& e) {
            std::cout << "       (exception: " << e.what() << ")\n";
            ok = false;
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << checks[i].name << '\n';
        failures += ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
