#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "integer.hpp"
#include "polyomino.hpp"

namespace polyplateau {

namespace detail {
inline void validate_dpp_args(long long d, long long k, long long n) {
    if (d < 3) throw std::domain_error("dimension must be >= 3");
    if (k < 1) throw std::domain_error("width must be >= 1");
    if (n < 0) throw std::domain_error("lateral area must be >= 0");
}
}  // namespace detail

// Closed form: the number of directed plateau polyhypercubes of width k and
// lateral area n in dimension d is C(n + (d-1)k - d, n - (d-1)k), zero below
// the minimal lateral area (d-1)k.
inline Integer count_dpp_closed(long long d, long long k, long long n) {
    detail::validate_dpp_args(d, k, n);
    if (n < (d - 1) * k) return 0;
    return binomial(n + (d - 1) * k - d, n - (d - 1) * k);
}

// Same count assembled the long way: a polyhypercube is determined by its
// d-1 lateral projections, so the count is the (d-1)-fold convolution of the
// per-axis column-convex counts at total area n.
inline Integer count_dpp_convolution(long long d, long long k, long long n) {
    detail::validate_dpp_args(d, k, n);
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    std::vector<Integer> axis(size);
    for (std::size_t j = 1; j < size; ++j) axis[j] = count_dccp(k, static_cast<long long>(j));

    std::vector<Integer> acc = axis;
    for (long long step = 0; step < d - 2; ++step) {
        std::vector<Integer> next(size);
        for (std::size_t i = 0; i < size; ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; i + j < size; ++j) {
                if (axis[j] == 0) continue;
                next[i + j] += acc[i] * axis[j];
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

// Left side of the Vandermonde-style identity
// sum_{k=0..n} C(x+k, k) C(y+n-k, n-k), summed term by term; equals
// C(x+y+n+1, n).
inline Integer vandermonde_lhs(long long x, long long y, long long n) {
    if (x < 0 || y < 0 || n < 0)
        throw std::domain_error("vandermonde_lhs: arguments must be >= 0");
    Integer total = 0;
    for (long long k = 0; k <= n; ++k) total += binomial(x + k, k) * binomial(y + n - k, n - k);
    return total;
}

// Counts for every width 1..k_max and lateral area 0..n_max at a fixed
// dimension. rows[i][n] is the count for width i+1.
struct CountTable {
    long long dimension = 3;
    std::vector<std::vector<Integer>> rows;

    long long k_max() const { return static_cast<long long>(rows.size()); }
    long long n_max() const {
        return rows.empty() ? -1 : static_cast<long long>(rows.front().size()) - 1;
    }
    bool operator==(const CountTable&) const = default;
};

inline CountTable build_table(long long d, long long k_max, long long n_max) {
    if (d < 3) throw std::domain_error("build_table: dimension must be >= 3");
    if (k_max < 1) throw std::domain_error("build_table: k_max must be >= 1");
    if (n_max < 0) throw std::domain_error("build_table: n_max must be >= 0");
    CountTable t;
    t.dimension = d;
    t.rows.reserve(static_cast<std::size_t>(k_max));
    for (long long k = 1; k <= k_max; ++k) {
        std::vector<Integer> row;
        row.reserve(static_cast<std::size_t>(n_max) + 1);
        for (long long n = 0; n <= n_max; ++n) row.push_back(count_dpp_closed(d, k, n));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace polyplateau
